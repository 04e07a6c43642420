use crate::ntsieves::{integer_root, smallest_prime_factors};

use super::{DiscriminantTally, FieldCountError};

/// One admissible conductor of cyclic fields of prime degree `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConductorEntry {
    pub f: u64,
    /// Ramified primes, `ℓ` included once when `ℓ² ∥ f`.
    pub t: u32,
    /// Fields of exact conductor `f`: `(ℓ − 1)^(t − 1)`.
    pub multiplicity: u64,
    /// `f^(ℓ − 1)`.
    pub disc: u128,
}

pub(crate) fn is_odd_prime(n: u64) -> bool {
    n >= 3 && n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Conductors `f ≤ fmax` of cyclic degree-`ℓ` fields over ℚ.
///
/// `f` is a product of distinct primes `p ≡ 1 (mod ℓ)`, optionally times
/// `ℓ²`, and `f > 1`.
pub fn cyclic_conductors(ell: u64, fmax: u64) -> Result<Vec<ConductorEntry>, FieldCountError> {
    if !is_odd_prime(ell) {
        return Err(FieldCountError::NotOddPrime(ell));
    }
    let fmax = fmax as usize;
    let spf = smallest_prime_factors(fmax);
    let mut out = Vec::new();
    'f: for f in 2..=fmax {
        let mut n = f;
        let mut t = 0u32;
        while n > 1 {
            let p = spf[n] as usize;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            let ok = (e == 1 && p as u64 % ell == 1) || (e == 2 && p as u64 == ell);
            if !ok {
                continue 'f;
            }
            t += 1;
        }
        let f = f as u64;
        out.push(ConductorEntry {
            f,
            t,
            multiplicity: (ell - 1).pow(t - 1),
            disc: (f as u128).pow(ell as u32 - 1),
        });
    }
    Ok(out)
}

/// Cyclic degree-`ℓ` fields with discriminant `≤ x`, tallied by discriminant.
pub fn cyclic_tally(ell: u64, x: u64) -> Result<DiscriminantTally, FieldCountError> {
    if !is_odd_prime(ell) {
        return Err(FieldCountError::NotOddPrime(ell));
    }
    let fmax = integer_root(x, ell as u32 - 1);
    let entries = cyclic_conductors(ell, fmax)?;
    Ok(DiscriminantTally::from_counts(
        format!("C{ell}"),
        entries.into_iter().map(|e| (e.disc as u64, e.multiplicity)),
    ))
}

/// `Z(ℚ, C_ℓ; x)`.
pub fn count_cyclic_ell(ell: u64, x: u64) -> Result<u64, FieldCountError> {
    Ok(cyclic_tally(ell, x)?.total())
}
