//! Monomial ideals represented by their minimal generating sets.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal in `n` variables, stored as its minimal generating set
/// `G(I)`.
///
/// Generators are kept sorted in decreasing lex order (largest exponent
/// vector first), so structural equality is ideal equality. The zero ideal
/// has no generators; the unit ideal has the single generator 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealDocument")]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

/// Unvalidated wire form of an ideal file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealDocument {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealDocument> for MonomialIdeal {
    type Error = Error;

    fn try_from(doc: IdealDocument) -> Result<Self> {
        let gens = doc.generators.into_iter().map(Monomial::new);
        MonomialIdeal::minimalize(gens, doc.n)
    }
}

impl From<&MonomialIdeal> for IdealDocument {
    fn from(ideal: &MonomialIdeal) -> Self {
        IdealDocument {
            n: ideal.n,
            generators: ideal
                .generators
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }
}

impl MonomialIdeal {
    /// Builds the ideal generated by `candidates`, keeping only the
    /// divisibility-minimal elements.
    pub fn minimalize<I>(candidates: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut cands: Vec<Monomial> = Vec::new();
        for c in candidates {
            c.check_ambient(n)?;
            cands.push(c);
        }
        Ok(Self::from_checked(cands, n))
    }

    pub(crate) fn from_checked(mut cands: Vec<Monomial>, n: usize) -> Self {
        cands.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        cands.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(cands.len());
        for c in cands {
            if !kept.iter().any(|k| k.divides(&c)) {
                kept.push(c);
            }
        }
        kept.sort_unstable_by(|a, b| b.cmp(a));
        MonomialIdeal {
            n,
            generators: kept,
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![Monomial::one(n)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            n: m.n(),
            generators: vec![m],
        }
    }

    /// The ideal `(x_i : i in vars)` generated by variables.
    pub fn variables(n: usize, vars: &[usize]) -> Self {
        Self::from_checked(vars.iter().map(|&i| Monomial::var(n, i)).collect(), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// Membership of a monomial: some minimal generator divides it.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    fn check_same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for u in &self.generators {
            for v in &other.generators {
                prods.push(u * v);
            }
        }
        Ok(Self::from_checked(prods, self.n))
    }

    /// `m * I`.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        m.check_ambient(self.n)?;
        let gens = self.generators.iter().map(|g| g * m).collect();
        // Multiplying by a monomial preserves minimality and order.
        Ok(MonomialIdeal {
            n: self.n,
            generators: gens,
        })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let all = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .cloned()
            .collect();
        Ok(Self::from_checked(all, self.n))
    }

    pub fn ideal_equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ambient(other)?;
        Ok(self == other)
    }

    /// `I : m`, generated by `u / gcd(u, m)` for `u` in `G(I)`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        m.check_ambient(self.n)?;
        let gens = self.generators.iter().map(|u| u.colon(m)).collect();
        Ok(Self::from_checked(gens, self.n))
    }

    /// The common degree of all minimal generators, if there is one.
    pub fn equigenerated_degree(&self) -> Result<Option<u32>> {
        let first = self.generators.first().ok_or(Error::ZeroIdeal)?.degree();
        Ok(self
            .generators
            .iter()
            .all(|g| g.degree() == first)
            .then_some(first))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub(crate) fn generator_set(&self) -> HashSet<&Monomial> {
        self.generators.iter().collect()
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        NamedIdeal { ideal: self, names }
    }
}

struct NamedIdeal<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for NamedIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.ideal.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display_with(self.names))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        NamedIdeal {
            ideal: self,
            names: &[],
        }
        .fmt(f)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
