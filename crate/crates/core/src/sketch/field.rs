//! Arithmetic modulo the Mersenne prime `2^61 - 1` and seeded polynomial hashes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `2^61 - 1`.
pub const PRIME: u64 = (1 << 61) - 1;

#[inline]
pub fn reduce(x: u128) -> u64 {
    let lo = (x as u64) & PRIME;
    let hi = (x >> 61) as u64;
    let s = lo + (hi & PRIME) + ((x >> 122) as u64);
    let s = (s & PRIME) + (s >> 61);
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

pub fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    base %= PRIME;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

/// Embeds a signed integer into the field.
#[inline]
pub fn from_signed(v: i64) -> u64 {
    v.rem_euclid(PRIME as i64) as u64
}

/// Mixes `(seed, parts...)` into a child seed (splitmix64 finaliser per part).
pub fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    let mut h = seed ^ 0x9E37_79B9_7F4A_7C15;
    for &p in parts {
        h = h.wrapping_add(p).wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = h;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        h = z ^ (z >> 31);
    }
    h
}

/// Seeded RNG used to draw hash coefficients and fingerprint bases.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Degree-3 polynomial over the field: a 4-wise independent hash family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyHash {
    coeffs: [u64; 4],
}

impl PolyHash {
    pub fn from_rng<R: Rng>(rng: &mut R) -> Self {
        let mut coeffs = [0u64; 4];
        for c in &mut coeffs {
            *c = rng.gen_range(0..PRIME);
        }
        // a nonzero leading coefficient keeps the polynomial of full degree
        if coeffs[3] == 0 {
            coeffs[3] = 1;
        }
        PolyHash { coeffs }
    }

    #[inline]
    pub fn eval(&self, x: u64) -> u64 {
        let x = x % PRIME;
        let mut acc = self.coeffs[3];
        for &c in self.coeffs[..3].iter().rev() {
            acc = add(mul(acc, x), c);
        }
        acc
    }

    /// Bucket in `[0, buckets)`.
    #[inline]
    pub fn bucket(&self, x: u64, buckets: usize) -> usize {
        (self.eval(x) % buckets as u64) as usize
    }

    /// Geometric level: the number of trailing zero bits of the hash value,
    /// capped at `max`. Level `>= l` holds with probability about `2^-l`.
    #[inline]
    pub fn level(&self, x: u64, max: usize) -> usize {
        let h = self.eval(x);
        if h == 0 {
            max
        } else {
            (h.trailing_zeros() as usize).min(max)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_matches_naive_modulo() {
        let samples = [0u128, 1, PRIME as u128, PRIME as u128 + 5, u64::MAX as u128];
        for &a in &samples {
            for &b in &samples {
                let x = a * b;
                assert_eq!(reduce(x) as u128, x % PRIME as u128);
            }
        }
        let mut r = rng(1);
        for _ in 0..10_000 {
            let a: u64 = r.gen_range(0..PRIME);
            let b: u64 = r.gen_range(0..PRIME);
            assert_eq!(mul(a, b) as u128, (a as u128 * b as u128) % PRIME as u128);
        }
    }

    #[test]
    fn pow_small_cases() {
        assert_eq!(pow(3, 0), 1);
        assert_eq!(pow(3, 5), 243);
        // Fermat: a^(p-1) = 1
        assert_eq!(pow(123_456_789, PRIME - 1), 1);
    }

    #[test]
    fn signed_embedding() {
        assert_eq!(from_signed(-1), PRIME - 1);
        assert_eq!(add(from_signed(-5), 5), 0);
    }

    #[test]
    fn derived_seeds_differ() {
        let a = derive_seed(7, &[1, 2]);
        assert_ne!(a, derive_seed(7, &[2, 1]));
        assert_ne!(a, derive_seed(8, &[1, 2]));
        assert_eq!(a, derive_seed(7, &[1, 2]));
    }

    #[test]
    fn level_distribution_is_geometric() {
        let h = PolyHash::from_rng(&mut rng(3));
        let trials = 200_000u64;
        let deep = (1..=trials).filter(|&i| h.level(i, 40) >= 3).count() as f64;
        let frac = deep / trials as f64;
        assert!((frac - 0.125).abs() < 0.01, "{frac}");
    }
}
