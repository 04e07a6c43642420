//! Permutation representations built from smaller ones: natural actions,
//! regular representations, coset actions, direct and wreath products, and
//! two matrix groups with fixed labelings.
//!
//! Point labels are deterministic. Regular and coset actions number points in
//! the enumeration order of the acting group (first element seen labels the
//! first point), products use row-major grids.

mod domination;
mod matrix;

pub use domination::{check_index_domination, render_word, DominationReport, DominationWitness, DualRep};
pub use matrix::{heisenberg_mod3, sl2_natural};

use std::collections::HashMap;

use thiserror::Error;

use crate::permcore::{orbit, GroupError, Perm, PermError, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("subgroup generator {0} is not an element of the group")]
    NotInGroup(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported degree {degree} for {family}")]
    InvalidDegree { family: &'static str, degree: usize },
    #[error("representations disagree: word {word} is trivial in only one of them")]
    Inconsistent { word: String },
    #[error("generator counts differ: {0} vs {1}")]
    GeneratorCountMismatch(usize, usize),
    #[error("construction failed its self-check: {0}")]
    Verification(String),
}

fn cycle_on(points: &[usize], degree: usize) -> Perm {
    let mut images: Vec<usize> = (0..degree).collect();
    for (k, &p) in points.iter().enumerate() {
        images[p] = points[(k + 1) % points.len()];
    }
    Perm::from_images(images).expect("cycle on distinct points")
}

/// The cyclic group generated by `(1 2 … n)`.
pub fn cyclic(n: usize) -> Result<PermGroup, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::InvalidDegree { family: "C", degree: n });
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(PermGroup::new(n, vec![cycle_on(&all, n)])?)
}

/// The symmetric group on `n` points, generated by `(1 2)` and `(1 2 … n)`.
pub fn symmetric(n: usize) -> Result<PermGroup, ConstructionError> {
    match n {
        0 => Err(ConstructionError::InvalidDegree { family: "S", degree: n }),
        1 => Ok(PermGroup::trivial(1)),
        _ => {
            let all: Vec<usize> = (0..n).collect();
            Ok(PermGroup::new(n, vec![cycle_on(&[0, 1], n), cycle_on(&all, n)])?)
        }
    }
}

/// The alternating group on `n` points, generated by the 3-cycles `(1 2 i)`.
pub fn alternating(n: usize) -> Result<PermGroup, ConstructionError> {
    match n {
        0 => Err(ConstructionError::InvalidDegree { family: "A", degree: n }),
        1 | 2 => Ok(PermGroup::trivial(n)),
        _ => Ok(PermGroup::new(n, (2..n).map(|i| cycle_on(&[0, 1, i], n)).collect())?),
    }
}

/// The dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Result<PermGroup, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidDegree { family: "D", degree: n });
    }
    let all: Vec<usize> = (0..n).collect();
    let reflection = Perm::from_images((0..n).map(|i| (n - i) % n).collect())?;
    Ok(PermGroup::new(n, vec![cycle_on(&all, n), reflection])?)
}

fn index_of(elems: &[Perm]) -> HashMap<&Perm, usize> {
    elems.iter().enumerate().map(|(i, g)| (g, i)).collect()
}

/// Left regular representation: generator `s` sends point `i` (the `i`-th
/// enumerated element `g`) to the point labelled by `s∘g`.
pub fn regular_rep(group: &PermGroup, cap: usize) -> Result<PermGroup, GroupError> {
    let elems = group.enumerate(cap)?;
    let index = index_of(elems);
    let gens = group
        .generators()
        .iter()
        .map(|s| {
            let images = elems.iter().map(|g| index[&s.compose_unchecked(g)]).collect();
            Perm::from_images(images).expect("left translation is a bijection")
        })
        .collect();
    Ok(PermGroup::new(elems.len(), gens)?)
}

/// Action on the left cosets `gH` of the subgroup generated by
/// `subgroup_gens`.
///
/// Cosets are numbered in the order their first element appears in the
/// enumeration of `group`. Also returns whether the action is faithful.
pub fn coset_action(
    group: &PermGroup,
    subgroup_gens: &[Perm],
    cap: usize,
) -> Result<(PermGroup, bool), ConstructionError> {
    let elems = group.enumerate(cap)?;
    let index = index_of(elems);
    let sub = PermGroup::new(group.degree(), subgroup_gens.to_vec())?;
    for h in sub.generators() {
        if !index.contains_key(h) {
            return Err(ConstructionError::NotInGroup(h.to_string()));
        }
    }
    let sub_elems = sub.enumerate(cap)?;

    let mut coset_of = vec![usize::MAX; elems.len()];
    let mut reps = Vec::new();
    for (i, g) in elems.iter().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        for h in sub_elems {
            coset_of[index[&g.compose_unchecked(h)]] = reps.len();
        }
        reps.push(g);
    }
    let gens = group
        .generators()
        .iter()
        .map(|s| {
            let images = reps.iter().map(|r| coset_of[index[&s.compose_unchecked(r)]]).collect();
            Perm::from_images(images).expect("left translation permutes cosets")
        })
        .collect();
    let action = PermGroup::new(reps.len(), gens)?;
    let faithful = action.order(cap)? == elems.len();
    Ok((action, faithful))
}

/// `H × Z` on the grid of `n·m` points, point `(i, j)` labelled `i·m + j`.
///
/// The generators are those of `H` followed by those of `Z`.
pub fn direct_product(h: &PermGroup, z: &PermGroup) -> PermGroup {
    let (n, m) = (h.degree(), z.degree());
    let on_rows = h.generators().iter().map(|g| {
        Perm::from_images((0..n * m).map(|p| g.apply(p / m) * m + p % m).collect()).expect("grid bijection")
    });
    let on_cols = z.generators().iter().map(|g| {
        Perm::from_images((0..n * m).map(|p| (p / m) * m + g.apply(p % m)).collect()).expect("grid bijection")
    });
    PermGroup::new(n * m, on_rows.chain(on_cols).collect()).expect("degrees agree")
}

/// The imprimitive wreath product `A ≀ H` on `a·n` points.
///
/// Point `b·a + p` is position `p` of block `b`. `A` acts in block 0 (and in
/// one block per further orbit when `H` is intransitive); `H` permutes whole
/// blocks. The enumerated order is checked against `|A|^n·|H|`.
pub fn wreath(a: &PermGroup, h: &PermGroup, cap: usize) -> Result<PermGroup, ConstructionError> {
    let (da, n) = (a.degree(), h.degree());
    let order_a = a.order(cap)? as u128;
    let order_h = h.order(cap)? as u128;
    let expected = (0..n)
        .try_fold(order_h, |acc, _| acc.checked_mul(order_a))
        .filter(|&e| e <= cap as u128)
        .ok_or(GroupError::CapExceeded { cap })?;

    let mut block_reps = Vec::new();
    let mut covered = vec![false; n];
    for b in 0..n {
        if !covered[b] {
            for x in orbit(n, h.generators(), b) {
                covered[x] = true;
            }
            block_reps.push(b);
        }
    }
    let mut gens = Vec::new();
    for &b in &block_reps {
        for g in a.generators() {
            let images = (0..da * n)
                .map(|pt| if pt / da == b { b * da + g.apply(pt % da) } else { pt })
                .collect();
            gens.push(Perm::from_images(images)?);
        }
    }
    for g in h.generators() {
        let images = (0..da * n).map(|pt| g.apply(pt / da) * da + pt % da).collect();
        gens.push(Perm::from_images(images)?);
    }
    let group = PermGroup::new(da * n, gens)?;
    let order = group.order(cap)? as u128;
    if order != expected {
        return Err(ConstructionError::Verification(format!(
            "wreath product has order {order}, expected {expected}"
        )));
    }
    Ok(group)
}
