//! Group expressions such as `wreath(C 2, natural(A 4))`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::constructions::{
    alternating, coset_action, cyclic, dihedral, direct_product, heisenberg_mod3, regular_rep, sl2_natural, symmetric,
    wreath,
};
use crate::permcore::{Perm, PermGroup};

use super::files::read_group_file;
use super::CliError;

/// Families with a built-in natural action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Alternating,
    Symmetric,
    Dihedral,
}

impl Family {
    fn from_letter(s: &str) -> Option<Family> {
        match s {
            "C" => Some(Family::Cyclic),
            "A" => Some(Family::Alternating),
            "S" => Some(Family::Symmetric),
            "D" => Some(Family::Dihedral),
            _ => None,
        }
    }

    fn letter(self) -> char {
        match self {
            Family::Cyclic => 'C',
            Family::Alternating => 'A',
            Family::Symmetric => 'S',
            Family::Dihedral => 'D',
        }
    }
}

/// A parsed group expression.
///
/// ```text
/// EXPR := natural(F n) | F n            F ∈ {C, A, S, D}
///       | regular(EXPR) | wreath(EXPR, EXPR) | product(EXPR, EXPR)
///       | cosets(EXPR, "gen;gen;…") | sl2(p) | heis3() | file(PATH)
/// ```
///
/// Whitespace between tokens is ignored. `wreath(A, H)` is `A ≀ H` with
/// `H` permuting the blocks. `D n` is the dihedral group of order `2n` on
/// `n` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Natural(Family, usize),
    Regular(Box<GroupSpec>),
    Wreath(Box<GroupSpec>, Box<GroupSpec>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Cosets(Box<GroupSpec>, Vec<String>),
    Sl2(u64),
    Heis3,
    File(PathBuf),
}

impl GroupSpec {
    /// Builds the permutation group, enumerating intermediate groups up to
    /// `cap` elements where a construction needs them.
    pub fn build(&self, cap: usize) -> Result<PermGroup, CliError> {
        Ok(match self {
            GroupSpec::Natural(f, n) => match f {
                Family::Cyclic => cyclic(*n)?,
                Family::Alternating => alternating(*n)?,
                Family::Symmetric => symmetric(*n)?,
                Family::Dihedral => dihedral(*n)?,
            },
            GroupSpec::Regular(g) => regular_rep(&g.build(cap)?, cap)?,
            GroupSpec::Wreath(a, h) => wreath(&a.build(cap)?, &h.build(cap)?, cap)?,
            GroupSpec::Product(h, z) => direct_product(&h.build(cap)?, &z.build(cap)?),
            GroupSpec::Cosets(g, gens) => {
                let g = g.build(cap)?;
                let gens = gens
                    .iter()
                    .map(|s| Perm::parse_cycles(s, g.degree()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::Parse(format!("cosets subgroup generator: {e}")))?;
                coset_action(&g, &gens, cap)?.0
            }
            GroupSpec::Sl2(p) => sl2_natural(*p)?,
            GroupSpec::Heis3 => heisenberg_mod3()?,
            GroupSpec::File(path) => read_group_file(path)?,
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Natural(fam, n) => write!(f, "natural({} {n})", fam.letter()),
            GroupSpec::Regular(g) => write!(f, "regular({g})"),
            GroupSpec::Wreath(a, h) => write!(f, "wreath({a}, {h})"),
            GroupSpec::Product(h, z) => write!(f, "product({h}, {z})"),
            GroupSpec::Cosets(g, gens) => write!(f, "cosets({g}, \"{}\")", gens.join(";")),
            GroupSpec::Sl2(p) => write!(f, "sl2({p})"),
            GroupSpec::Heis3 => f.write_str("heis3()"),
            GroupSpec::File(p) => write!(f, "file(\"{}\")", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<GroupSpec, CliError> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> CliError {
        CliError::Parse(format!("group expression, byte {}: {msg}", self.pos))
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        let len = self.rest().find(|c| !pred(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> Result<u64, CliError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        digits.parse().map_err(|_| self.error("integer out of range"))
    }

    fn quoted(&mut self) -> Result<String, CliError> {
        self.expect('"')?;
        let body = self.take_while(|c| c != '"').to_string();
        self.expect('"')?;
        Ok(body)
    }

    fn natural(&mut self, letters: &str) -> Result<GroupSpec, CliError> {
        let family = Family::from_letter(letters).ok_or_else(|| self.error("family must be one of C, A, S, D"))?;
        Ok(GroupSpec::Natural(family, self.integer()? as usize))
    }

    fn expr(&mut self) -> Result<GroupSpec, CliError> {
        self.skip_ws();
        let name = self.take_while(|c| c.is_ascii_alphabetic()).to_string();
        if Family::from_letter(&name).is_some() {
            return self.natural(&name);
        }
        let name = name + self.take_while(|c| c.is_ascii_digit());
        let spec = match name.as_str() {
            "natural" => {
                self.expect('(')?;
                self.skip_ws();
                let letters = self.take_while(|c| c.is_ascii_alphabetic()).to_string();
                self.natural(&letters)?
            }
            "regular" => {
                self.expect('(')?;
                GroupSpec::Regular(Box::new(self.expr()?))
            }
            "wreath" | "product" => {
                self.expect('(')?;
                let left = Box::new(self.expr()?);
                self.expect(',')?;
                let right = Box::new(self.expr()?);
                if name == "wreath" {
                    GroupSpec::Wreath(left, right)
                } else {
                    GroupSpec::Product(left, right)
                }
            }
            "cosets" => {
                self.expect('(')?;
                let g = Box::new(self.expr()?);
                self.expect(',')?;
                let gens = self.quoted()?.split(';').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                GroupSpec::Cosets(g, gens)
            }
            "sl2" => {
                self.expect('(')?;
                GroupSpec::Sl2(self.integer()?)
            }
            "heis3" => {
                self.expect('(')?;
                GroupSpec::Heis3
            }
            "file" => {
                self.expect('(')?;
                self.skip_ws();
                let path = if self.rest().starts_with('"') {
                    self.quoted()?
                } else {
                    self.take_while(|c| c != ')').trim_end().to_string()
                };
                if path.is_empty() {
                    return Err(self.error("empty path"));
                }
                GroupSpec::File(PathBuf::from(path))
            }
            "" => return Err(self.error("expected a group expression")),
            other => return Err(self.error(&format!("unknown construction {other:?}"))),
        };
        self.expect(')')?;
        Ok(spec)
    }
}
