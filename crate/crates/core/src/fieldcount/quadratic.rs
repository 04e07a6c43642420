use crate::ntsieves::squarefree_sieve;

use super::DiscriminantTally;

/// Number of quadratic fields with `|d| = n`, given whether `n` and `n/4`
/// are squarefree.
///
/// Odd squarefree `n > 1` contributes one of `±n` (the sign with `d ≡ 1 mod
/// 4`). For `n = 4m` with `m` squarefree, `4m` counts when `m ≡ 2, 3` and
/// `−4m` when `m ≡ 1, 2 (mod 4)`.
fn fields_with_abs_disc(n: usize, sqfree: &[bool]) -> u64 {
    match n % 4 {
        1 | 3 => (n > 1 && sqfree[n]) as u64,
        0 => {
            let m = n / 4;
            if !sqfree[m] {
                0
            } else if m % 4 == 2 {
                2
            } else {
                (m % 2 == 1) as u64
            }
        }
        _ => 0,
    }
}

/// Signed fundamental discriminants with `|d| ≤ x`, ordered by `|d|`, then
/// negative before positive.
pub fn fundamental_discriminants(x: u64) -> Vec<i64> {
    let x = x as usize;
    let sieve = squarefree_sieve(x);
    let sq = sieve.flags();
    let mut out = Vec::new();
    for n in 3..=x {
        let i = n as i64;
        match n % 4 {
            1 if sq[n] => out.push(i),
            3 if sq[n] => out.push(-i),
            0 if sq[n / 4] => {
                let m = n / 4;
                if m % 4 == 1 || m % 4 == 2 {
                    out.push(-i);
                }
                if m % 4 == 2 || m % 4 == 3 {
                    out.push(i);
                }
            }
            _ => {}
        }
    }
    out
}

/// Quadratic fields, tallied by `|d|` (real and imaginary merged).
pub fn quadratic_tally(x: u64) -> DiscriminantTally {
    let sieve = squarefree_sieve(x as usize);
    let sq = sieve.flags();
    DiscriminantTally::from_counts(
        "C2",
        (1..=x as usize).map(|n| (n as u64, fields_with_abs_disc(n, sq))),
    )
}

/// `Z(ℚ, C₂; x)`: number of quadratic fields with `|d| ≤ x`.
pub fn count_quadratic(x: u64) -> u64 {
    let sieve = squarefree_sieve(x as usize);
    let sq = sieve.flags();
    (1..=x as usize).map(|n| fields_with_abs_disc(n, sq)).sum()
}

/// `m` squarefree with `d = m` or `d = 4m`.
pub(crate) fn squarefree_part(d: i64) -> i64 {
    if d % 4 == 0 { d / 4 } else { d }
}

/// Discriminant of `ℚ(√m)` for a squarefree `m ≠ 1`.
pub(crate) fn disc_of_squarefree(m: i64) -> i64 {
    if m.rem_euclid(4) == 1 { m } else { 4 * m }
}
