//! Small combinatorial helpers shared across the solvers.

/// Calls `f` with every `size`-subset of `0..n`, as a slice of ascending
/// indices. Returns early with `false` if `f` does.
pub(crate) fn for_each_combination(n: usize, size: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(n: usize, start: usize, buf: &mut Vec<usize>, left: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if left == 0 {
            return f(buf);
        }
        // Not enough items remain to fill the subset.
        if start + left > n {
            return true;
        }
        for i in start..=(n - left) {
            buf.push(i);
            if !rec(n, i + 1, buf, left - 1, f) {
                return false;
            }
            buf.pop();
        }
        true
    }
    rec(n, 0, &mut Vec::with_capacity(size), size, f)
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Sum of binomials `C(n, 0) + ... + C(n, max)`, saturating.
pub(crate) fn binomial_sum(n: usize, max: usize) -> u128 {
    (0..=max).fold(0u128, |acc, k| acc.saturating_add(binomial(n, k)))
}

/// 64-bit FNV-1a over bytes; used for stable instance fingerprints.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// Splits a base seed into an independent stream seed for the given index.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut x = seed ^ index.wrapping_mul(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}
