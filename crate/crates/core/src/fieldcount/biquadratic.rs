use std::cmp::Ordering;

use crate::ntsieves::integer_root;

use super::quadratic::{disc_of_squarefree, fundamental_discriminants, squarefree_part};
use super::DiscriminantTally;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    (a, b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The third quadratic subfield of `ℚ(√d₁, √d₂)`: the discriminant of
/// `ℚ(√(d₁d₂))`.
pub fn third_discriminant(d1: i64, d2: i64) -> i64 {
    let (m1, m2) = (squarefree_part(d1), squarefree_part(d2));
    let g = gcd(m1, m2);
    disc_of_squarefree((m1 / g) * (m2 / g))
}

fn key(d: i64) -> (u64, i64) {
    (d.unsigned_abs(), d)
}

fn by_key(a: i64, b: i64) -> Ordering {
    key(a).cmp(&key(b))
}

/// Biquadratic fields with `|d₁d₂d₃| ≤ x`, each given by its three quadratic
/// subfield discriminants in `(|d|, d)` order.
///
/// The field discriminant is `d₁d₂d₃`. Triples are produced by their smallest
/// member `d₁` (so `|d₁|³ ≤ x`) and middle member `d₂` (so `|d₁|·|d₂|² ≤ x`).
pub fn biquadratic_fields(x: u64) -> Vec<[i64; 3]> {
    let x128 = x as u128;
    let d2_max = integer_root(x / 3, 2);
    let discs = fundamental_discriminants(d2_max);
    let mut out = Vec::new();
    for (i, &d1) in discs.iter().enumerate() {
        let a1 = d1.unsigned_abs() as u128;
        if a1 * a1 * a1 > x128 {
            break;
        }
        for &d2 in &discs[i + 1..] {
            let a2 = d2.unsigned_abs() as u128;
            if a1 * a2 * a2 > x128 {
                break;
            }
            let d3 = third_discriminant(d1, d2);
            if by_key(d3, d2) != Ordering::Greater {
                continue;
            }
            if a1 * a2 * d3.unsigned_abs() as u128 <= x128 {
                out.push([d1, d2, d3]);
            }
        }
    }
    out.sort_by_key(|t| (disc_of(t), key(t[0]), key(t[1])));
    out
}

fn disc_of(t: &[i64; 3]) -> u64 {
    t.iter().map(|d| d.unsigned_abs()).product()
}

pub fn biquadratic_tally(x: u64) -> DiscriminantTally {
    DiscriminantTally::from_discriminants("C2xC2", biquadratic_fields(x).iter().map(disc_of))
}

/// `Z(ℚ, C₂×C₂; x)` for the regular degree-4 action.
pub fn count_biquadratic(x: u64) -> u64 {
    biquadratic_fields(x).len() as u64
}
