use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use num_rational::Ratio;

use super::closure::bfs_closure;
use super::{GroupError, Perm, PermError};

/// Default bound on the number of elements enumerated for one group.
pub const DEFAULT_CAP: usize = 1_000_000;

/// The exponent `a(G)` as an exact rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AValue(Ratio<u64>);

impl AValue {
    pub const ZERO: AValue = AValue(Ratio::new_raw(0, 1));

    pub fn new(numerator: u64, denominator: u64) -> AValue {
        AValue(Ratio::new(numerator, denominator))
    }

    /// `1 / min_ind`, or zero when there is no nonidentity element.
    pub fn from_min_index(min_ind: Option<usize>) -> AValue {
        match min_ind {
            Some(m) => AValue::new(1, m as u64),
            None => AValue::ZERO,
        }
    }

    pub fn numerator(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> u64 {
        *self.0.denom()
    }

    pub fn ratio(&self) -> Ratio<u64> {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }
}

impl From<Ratio<u64>> for AValue {
    fn from(r: Ratio<u64>) -> Self {
        AValue(r)
    }
}

impl fmt::Display for AValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator() == 1 {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl std::str::FromStr for AValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("not a fraction: {s:?}");
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: u64 = n.parse().map_err(|_| bad())?;
        let d: u64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(AValue::new(n, d))
    }
}

/// A permutation group given by generators, with a lazily enumerated
/// element list.
///
/// The element cache is filled at most once; concurrent readers either see
/// the finished list or compute it themselves and lose the race to store it.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: OnceLock<Vec<Perm>>,
}

impl PermGroup {
    /// An empty generator list is replaced by the identity.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let generators = if generators.is_empty() { vec![Perm::identity(degree)] } else { generators };
        Ok(PermGroup { degree, generators, elements: OnceLock::new() })
    }

    /// Parses each generator from 1-based cycle notation.
    pub fn from_cycles(degree: usize, generators: &[&str]) -> Result<PermGroup, PermError> {
        let gens = generators
            .iter()
            .map(|g| Perm::parse_cycles(g, degree))
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, vec![]).expect("degree checked by caller")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// All elements, breadth-first by word length.
    ///
    /// Within one word length, elements are sorted by the smallest generator
    /// index that reaches them, then lexicographically by image sequence.
    pub fn enumerate(&self, cap: usize) -> Result<&[Perm], GroupError> {
        if let Some(elems) = self.elements.get() {
            return if elems.len() > cap { Err(GroupError::CapExceeded { cap }) } else { Ok(elems) };
        }
        let nodes = bfs_closure(Perm::identity(self.degree), &self.generators, Perm::compose_unchecked, cap)
            .map_err(|()| GroupError::CapExceeded { cap })?;
        let elems: Vec<Perm> = nodes.into_iter().map(|n| n.elem).collect();
        let _ = self.elements.set(elems);
        Ok(self.elements.get().expect("just filled"))
    }

    pub fn order(&self, cap: usize) -> Result<usize, GroupError> {
        Ok(self.enumerate(cap)?.len())
    }

    pub fn contains(&self, p: &Perm, cap: usize) -> Result<bool, GroupError> {
        Ok(p.degree() == self.degree && self.enumerate(cap)?.contains(p))
    }

    /// Orbit of point 0 under the generators; no enumeration needed.
    pub fn is_transitive(&self) -> bool {
        orbit(self.degree, &self.generators, 0).len() == self.degree
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// `a(G) = 1 / min{ind(g) : g ≠ 1}`, and `a(1) = 0`.
    pub fn a_invariant(&self, cap: usize) -> Result<AValue, GroupError> {
        let min = self.enumerate(cap)?.iter().filter(|g| !g.is_identity()).map(Perm::ind).min();
        Ok(AValue::from_min_index(min))
    }

    /// The first element in enumeration order attaining the minimal index.
    pub fn min_index_witness(&self, cap: usize) -> Result<(Perm, usize), GroupError> {
        let mut best: Option<(&Perm, usize)> = None;
        for g in self.enumerate(cap)?.iter().filter(|g| !g.is_identity()) {
            let ind = g.ind();
            if best.is_none_or(|(_, b)| ind < b) {
                best = Some((g, ind));
            }
        }
        best.map(|(g, i)| (g.clone(), i)).ok_or(GroupError::TrivialGroup)
    }

    /// True when the generated group equals `other` as a set of permutations.
    pub fn same_elements(&self, other: &PermGroup, cap: usize) -> Result<bool, GroupError> {
        if self.degree != other.degree {
            return Ok(false);
        }
        let a: HashSet<&Perm> = self.enumerate(cap)?.iter().collect();
        let b = other.enumerate(cap)?;
        Ok(a.len() == b.len() && b.iter().all(|g| a.contains(g)))
    }
}

pub(crate) fn orbit(degree: usize, gens: &[Perm], start: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}
