use std::collections::HashSet;

use num_rational::Ratio;

use crate::permcore::{bfs_closure, word_of, AValue, GroupError, Perm, PermGroup};

use super::ConstructionError;

/// One abstract group given in two permutation representations.
///
/// Generator `i` of `gens1` and generator `i` of `gens2` are images of the
/// same abstract generator. That the two lists really define the same group
/// is checked during [`check_index_domination`].
#[derive(Debug, Clone)]
pub struct DualRep {
    gens1: Vec<Perm>,
    gens2: Vec<Perm>,
}

impl DualRep {
    pub fn new(gens1: Vec<Perm>, gens2: Vec<Perm>) -> Result<DualRep, ConstructionError> {
        if gens1.len() != gens2.len() || gens1.is_empty() {
            return Err(ConstructionError::GeneratorCountMismatch(gens1.len(), gens2.len()));
        }
        for gens in [&gens1, &gens2] {
            if let Some(bad) = gens.iter().find(|g| g.degree() != gens[0].degree()) {
                return Err(crate::permcore::PermError::DegreeMismatch {
                    left: gens[0].degree(),
                    right: bad.degree(),
                }
                .into());
            }
        }
        Ok(DualRep { gens1, gens2 })
    }

    /// Pairs the generator lists of two groups.
    pub fn from_groups(rep1: &PermGroup, rep2: &PermGroup) -> Result<DualRep, ConstructionError> {
        DualRep::new(rep1.generators().to_vec(), rep2.generators().to_vec())
    }

    pub fn gens1(&self) -> &[Perm] {
        &self.gens1
    }

    pub fn gens2(&self) -> &[Perm] {
        &self.gens2
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.gens1[0].degree(), self.gens2[0].degree())
    }
}

/// An element violating `a₂·ind₂(σ) ≥ a₁·ind₁(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationWitness {
    /// Generator indices (0-based), first-applied first.
    pub word: Vec<usize>,
    pub element1: Perm,
    pub element2: Perm,
    pub ind1: usize,
    pub ind2: usize,
    pub a1: AValue,
    pub a2: AValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    pub holds: bool,
    pub order: usize,
    pub a1: AValue,
    pub a2: AValue,
    pub witness: Option<DominationWitness>,
}

/// Renders a word as a product in composition order, 1-based: the word
/// `[0, 1]` (apply `g1`, then `g2`) prints as `g2*g1`.
pub fn render_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().rev().map(|i| format!("g{}", i + 1)).collect::<Vec<_>>().join("*")
}

fn weighted(a: AValue, ind: usize) -> Ratio<u64> {
    a.ratio() * Ratio::from_integer(ind as u64)
}

/// Checks `a₂·ind₂(σ) ≥ a₁·ind₁(σ)` for every element `σ` of the group.
///
/// The group is enumerated once as pairs `(φ₁(σ), φ₂(σ))`. If either
/// projection of that list is not injective, some word is trivial in one
/// representation and not in the other, and the pair is rejected.
pub fn check_index_domination(dual: &DualRep, cap: usize) -> Result<DominationReport, ConstructionError> {
    let (n1, n2) = dual.degrees();
    let gens: Vec<(Perm, Perm)> = dual.gens1.iter().cloned().zip(dual.gens2.iter().cloned()).collect();
    let nodes = bfs_closure(
        (Perm::identity(n1), Perm::identity(n2)),
        &gens,
        |g, x| (g.0.compose_unchecked(&x.0), g.1.compose_unchecked(&x.1)),
        cap,
    )
    .map_err(|()| GroupError::CapExceeded { cap })?;

    let mut seen1 = HashSet::new();
    let mut seen2 = HashSet::new();
    for (i, node) in nodes.iter().enumerate() {
        if !seen1.insert(&node.elem.0) || !seen2.insert(&node.elem.1) {
            // Some earlier element agrees in one coordinate; their quotient
            // is trivial on one side only.
            return Err(ConstructionError::Inconsistent { word: render_word(&word_of(&nodes, i)) });
        }
    }

    let min1 = nodes.iter().filter(|n| !n.elem.0.is_identity()).map(|n| n.elem.0.ind()).min();
    let min2 = nodes.iter().filter(|n| !n.elem.1.is_identity()).map(|n| n.elem.1.ind()).min();
    let (a1, a2) = (AValue::from_min_index(min1), AValue::from_min_index(min2));

    let witness = nodes.iter().enumerate().find_map(|(i, node)| {
        let (ind1, ind2) = (node.elem.0.ind(), node.elem.1.ind());
        (weighted(a2, ind2) < weighted(a1, ind1)).then(|| DominationWitness {
            word: word_of(&nodes, i),
            element1: node.elem.0.clone(),
            element2: node.elem.1.clone(),
            ind1,
            ind2,
            a1,
            a2,
        })
    });
    Ok(DominationReport { holds: witness.is_none(), order: nodes.len(), a1, a2, witness })
}
