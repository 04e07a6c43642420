use crate::permcore::{Perm, PermGroup, DEFAULT_CAP};

use super::{coset_action, ConstructionError};

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `SL₂(p)` acting on the `p² − 1` nonzero column vectors of `𝔽_p²`.
///
/// Vectors are labelled in lexicographic order of their coordinates; the
/// generators are the unipotent matrices `[[1,1],[0,1]]` and `[[1,0],[1,1]]`.
pub fn sl2_natural(p: u64) -> Result<PermGroup, ConstructionError> {
    if !is_prime(p) {
        return Err(ConstructionError::NotPrime(p));
    }
    if p > 97 {
        return Err(ConstructionError::InvalidDegree { family: "SL2", degree: p as usize });
    }
    let p = p as usize;
    let vectors: Vec<(usize, usize)> =
        (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let label = |(a, b): (usize, usize)| a * p + b - 1;
    let act = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
        Perm::from_images(vectors.iter().map(|&(a, b)| label(f(a, b))).collect())
    };
    let upper = act(&|a, b| ((a + b) % p, b))?;
    let lower = act(&|a, b| (a, (a + b) % p))?;
    Ok(PermGroup::new(vectors.len(), vec![upper, lower])?)
}

/// Upper unitriangular 3×3 matrices over 𝔽₃, written `(a, b, c)` for
/// `[[1, a, c], [0, 1, b], [0, 0, 1]]`.
type Unitriangular = (u8, u8, u8);

fn heis_mul(x: Unitriangular, y: Unitriangular) -> Unitriangular {
    ((x.0 + y.0) % 3, (x.1 + y.1) % 3, (x.2 + y.2 + x.0 * y.1) % 3)
}

/// The nonabelian group of order 27 and exponent 3 as a transitive group of
/// degree 9.
///
/// Built from the unitriangular matrices over 𝔽₃ acting on the cosets of the
/// non-central subgroup generated by `y = (0, 1, 0)`. The generators are the
/// images of `x = (1, 0, 0)` and `y`, in that order.
pub fn heisenberg_mod3() -> Result<PermGroup, ConstructionError> {
    let elems: Vec<Unitriangular> =
        (0..27u8).map(|i| (i / 9, (i / 3) % 3, i % 3)).collect();
    let label = |e: Unitriangular| (e.0 * 9 + e.1 * 3 + e.2) as usize;
    let left = |g: Unitriangular| Perm::from_images(elems.iter().map(|&e| label(heis_mul(g, e))).collect());
    let x = left((1, 0, 0))?;
    let y = left((0, 1, 0))?;
    let regular = PermGroup::new(27, vec![x, y.clone()])?;
    let (group, faithful) = coset_action(&regular, &[y], DEFAULT_CAP)?;

    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(ConstructionError::Verification(what.into())) };
    check(faithful, "coset action is not faithful")?;
    check(group.degree() == 9, "degree is not 9")?;
    check(group.is_transitive(), "not transitive")?;
    check(!group.is_abelian(), "abelian")?;
    let all = group.enumerate(DEFAULT_CAP)?;
    check(all.len() == 27, "order is not 27")?;
    check(all.iter().all(|g| g.is_identity() || g.element_order() == 3), "exponent is not 3")?;
    Ok(group)
}
