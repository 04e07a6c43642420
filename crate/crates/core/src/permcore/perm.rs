use std::fmt;

use super::PermError;

/// A permutation of the points `0..degree`, stored as its image sequence.
///
/// Composition is right-to-left: `p.compose(&q)` is the permutation
/// `i ↦ p(q(i))`, so `q` acts first. Every product in this crate (group
/// closure, coset actions, word evaluation) uses this one convention.
///
/// Points are 0-based internally. Cycle notation, both parsed and printed,
/// is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree).collect() }
    }

    /// Builds a permutation from its 0-based image sequence, checking that it
    /// is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, PermError> {
        if images.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let mut hit = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || hit[x] {
                return Err(PermError::NotBijection);
            }
            hit[x] = true;
        }
        Ok(Perm { images })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)` or `()`.
    ///
    /// Points not mentioned are fixed. Cycles must be disjoint.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let src = text.trim();
        let bytes = src.as_bytes();
        let syntax = |pos: usize, msg: &str| PermError::Syntax { pos, msg: msg.to_string() };

        if src.is_empty() {
            return Err(syntax(0, "empty expression"));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut pos = 0;
        let mut cycles = 0;

        while pos < bytes.len() {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() && cycles > 0 {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(syntax(pos, "expected '('"));
            }
            pos += 1;
            let open = pos;
            let mut points = Vec::new();
            loop {
                let ws_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                if pos == bytes.len() {
                    return Err(syntax(pos, "unterminated cycle"));
                }
                if bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                if !points.is_empty() && ws_start == pos {
                    return Err(syntax(pos, "points must be separated by whitespace"));
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(syntax(pos, "expected a point"));
                }
                let point: usize = src[start..pos]
                    .parse()
                    .map_err(|_| syntax(start, "point does not fit in an integer"))?;
                if point == 0 || point > degree {
                    return Err(PermError::OutOfRange { point, degree });
                }
                points.push(point - 1);
            }
            if points.is_empty() {
                // "()" is the identity and only valid on its own.
                if cycles > 0 || src[pos..].trim() != "" {
                    return Err(syntax(open, "empty cycle inside a product"));
                }
                return Ok(Perm { images });
            }
            for (k, &p) in points.iter().enumerate() {
                if used[p] {
                    return Err(PermError::RepeatedPoint(p + 1));
                }
                used[p] = true;
                images[p] = points[(k + 1) % points.len()];
            }
            cycles += 1;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// Cycle lengths, fixed points included, in order of smallest point.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// All cycles including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// The index `degree − #orbits`, i.e. the sum of `len − 1` over cycles.
    pub fn ind(&self) -> usize {
        self.degree() - self.cycles().len()
    }

    /// Least common multiple of the cycle lengths.
    pub fn element_order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |acc, len| lcm(acc, len as u64))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Perm {
        Perm::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn parses_identity_and_products() {
        assert_eq!(p("()", 4), Perm::identity(4));
        assert_eq!(p("(1 2 3)(4 5)", 5).images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p("(1 2 3) (4 5)", 5), p("(1 2 3)(4 5)", 5));
        assert_eq!(p(" (2) ", 3), Perm::identity(3));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Perm::parse_cycles("(1 9)", 5),
            Err(PermError::OutOfRange { point: 9, degree: 5 })
        );
        assert_eq!(Perm::parse_cycles("(1 2)(2 3)", 3), Err(PermError::RepeatedPoint(2)));
        assert_eq!(Perm::parse_cycles("(1 1)", 3), Err(PermError::RepeatedPoint(1)));
        assert!(matches!(Perm::parse_cycles("(1 2", 3), Err(PermError::Syntax { .. })));
        assert!(matches!(Perm::parse_cycles("1 2", 3), Err(PermError::Syntax { .. })));
        assert!(matches!(Perm::parse_cycles("(1,2)", 3), Err(PermError::Syntax { .. })));
        assert!(matches!(Perm::parse_cycles("(1 2)()", 3), Err(PermError::Syntax { .. })));
        assert!(matches!(Perm::parse_cycles("", 3), Err(PermError::Syntax { .. })));
        assert!(matches!(Perm::parse_cycles("(0 1)", 3), Err(PermError::OutOfRange { .. })));
    }

    #[test]
    fn display_round_trips() {
        for (text, n) in [("()", 3), ("(1 2 3)(4 5)", 6), ("(2 7)", 8)] {
            assert_eq!(p(text, n).to_string(), text);
        }
    }

    #[test]
    fn composition_order() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        // b first: 1→1→2, 2→3→3, 3→2→1
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, p("(1 2 3)", 3));
        assert_eq!(b.compose(&a).unwrap(), p("(1 3 2)", 3));
        assert_eq!(ab.compose(&Perm::identity(3)).unwrap(), ab);
        assert!(ab.compose(&ab.inverse()).unwrap().is_identity());
        assert!(matches!(
            a.compose(&Perm::identity(4)),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn index_and_order() {
        assert_eq!(Perm::identity(6).ind(), 0);
        assert_eq!(p("(1 2 3 4 5 6 7 8)", 8).ind(), 7);
        assert_eq!(Perm::identity(6).element_order(), 1);
        assert_eq!(p("(1 2)(3 4 5)", 5).element_order(), 6);
        assert_eq!(p("(1 2 3 4 5 6 7)", 9).element_order(), 7);
    }

    #[test]
    fn from_images_checks_bijection() {
        assert!(Perm::from_images(vec![1, 0, 2]).is_ok());
        assert_eq!(Perm::from_images(vec![1, 1, 2]), Err(PermError::NotBijection));
        assert_eq!(Perm::from_images(vec![0, 3, 1]), Err(PermError::NotBijection));
        assert_eq!(Perm::from_images(vec![]), Err(PermError::ZeroDegree));
    }
}
