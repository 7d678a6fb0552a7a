//! Small deterministic utilities: binomial coefficients, colexicographic
//! subset enumeration, and a seeded pseudo-random generator.
//!
//! All "random" data in this crate comes from [`SplitMix64`] with fixed
//! seeds, so every run of every computation is reproducible bit for bit.

/// Binomial coefficient as a `usize` (panics on overflow; inputs here stay
/// far below that).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All k-element subsets of {0..n-1} in colexicographic order.
///
/// Colex order sorts subsets by their largest element, then recursively by
/// the remainder; the rank of a sorted subset {s_0 < s_1 < ...} is
/// `sum_i C(s_i, i+1)`. This is the fixed ordering used for all wedge-power
/// coordinates in this crate.
pub fn subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn gen(from: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for v in from..n {
            acc.push(v);
            gen(v + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut acc = Vec::new();
    gen(0, n, k, &mut acc, &mut out);
    out.sort_by_key(|s| colex_rank(s));
    out
}

/// Colex rank of a sorted subset: `sum_i C(s_i, i+1)`.
pub fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(s, i + 1))
        .sum()
}

/// Deterministic 64-bit generator (SplitMix64). Used for all sampled test
/// data: conjugators, coefficient vectors, evaluation points.
#[derive(Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Nonzero integer in `-m..=m`.
    pub fn nonzero_in(&mut self, m: i64) -> i64 {
        loop {
            let v = self.int_in(-m, m);
            if v != 0 {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order_and_rank_agree() {
        for (n, k) in [(5, 2), (6, 3), (15, 3)] {
            let subs = subsets_colex(n, k);
            assert_eq!(subs.len(), binomial(n, k));
            for (i, s) in subs.iter().enumerate() {
                assert_eq!(colex_rank(s), i);
                let mut sorted = s.clone();
                sorted.sort_unstable();
                assert_eq!(&sorted, s);
            }
        }
    }

    #[test]
    fn colex_first_elements() {
        let subs = subsets_colex(4, 2);
        assert_eq!(subs[0], vec![0, 1]);
        assert_eq!(subs[1], vec![0, 2]);
        assert_eq!(subs[2], vec![1, 2]);
        assert_eq!(subs[3], vec![0, 3]);
    }

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
