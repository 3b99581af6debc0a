//! Test corpora of monomial ideals.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stairstep_core::MonomialIdeal;

/// Every proper nonzero monomial ideal whose minimal generators have both
/// exponents `<= max_exp`.
pub fn exhaustive(max_exp: u32) -> Vec<MonomialIdeal> {
    let n = max_exp as usize + 1;
    let mut out = Vec::new();
    // a staircase with r generators is a pair of r-subsets of 0..=max_exp,
    // a's taken decreasing and b's increasing
    for amask in 1u32..(1 << n) {
        let mut a: Vec<u32> = (0..n as u32).filter(|i| amask & (1 << i) != 0).collect();
        a.reverse();
        for bmask in 1u32..(1 << n) {
            if bmask.count_ones() != amask.count_ones() {
                continue;
            }
            let b: Vec<u32> = (0..n as u32).filter(|i| bmask & (1 << i) != 0).collect();
            let pairs: Vec<(u32, u32)> = a.iter().copied().zip(b.iter().copied()).collect();
            if let Ok(m) = MonomialIdeal::from_exponents(&pairs) {
                out.push(m);
            }
        }
    }
    out.sort_by(|x, y| x.generators().cmp(y.generators()));
    out
}

/// `count` random ideals with at most `max_gens` minimal generators and
/// exponents `<= max_exp`, reproducible from `seed`.
pub fn random(seed: u64, count: usize, max_gens: usize, max_exp: u32) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = max_exp as usize + 1;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = rng.random_range(1..=max_gens.min(span));
        let mut a: Vec<u32> = sample(&mut rng, span, r).into_iter().map(|v| v as u32).collect();
        let mut b: Vec<u32> = sample(&mut rng, span, r).into_iter().map(|v| v as u32).collect();
        a.sort_unstable_by(|p, q| q.cmp(p));
        b.sort_unstable();
        let pairs: Vec<(u32, u32)> = a.into_iter().zip(b).collect();
        if let Ok(m) = MonomialIdeal::from_exponents(&pairs) {
            out.push(m);
        }
    }
    out
}

/// The exhaustive corpus for exponents `<= 4` followed by 50 random ideals
/// with up to 6 generators and exponents `<= 10`.
pub fn standard(seed: u64) -> Vec<MonomialIdeal> {
    let mut out = exhaustive(4);
    out.extend(random(seed, 50, 6, 10));
    out
}
