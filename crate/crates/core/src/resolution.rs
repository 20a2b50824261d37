//! Multigraded Betti numbers of monomial ideals through upper Koszul
//! simplicial complexes, and the linear-resolution predicates built on
//! them.
//!
//! `β_{i,a}(I) = dim H̃_{i-1}(K^a(I))` where
//! `K^a(I) = { F ⊆ supp(a) : x^a / x_F ∈ I }`. Only multidegrees in the lcm
//! lattice of `G(I)` can carry nonzero Betti numbers, so the scan is
//! restricted to it. Homological indices refer to the ideal, so `β_0`
//! counts minimal generators.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{Field, SimplicialComplex};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MAX_VARS};

/// Default bound on `|G(I)|` for Betti computations.
pub const DEFAULT_GENERATOR_CAP: usize = 14;

const PARALLEL_THRESHOLD: usize = 256;

fn check_ideal(ideal: &MonomialIdeal, cap: usize) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.n() > MAX_VARS {
        return Err(Error::TooManyVariables {
            max: MAX_VARS,
            found: ideal.n(),
        });
    }
    if ideal.len() > cap {
        return Err(Error::ResourceCap {
            what: "minimal generator count",
            found: ideal.len(),
            cap,
            hint: "the lcm lattice may have 2^generators elements; raise the cap explicitly or use the exchange check",
        });
    }
    Ok(())
}

/// Join-closure of `G(I)` under lcm, sorted.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let l = a.lcm(g);
                if seen.insert(l.clone()) {
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// The upper Koszul complex `K^a(I)`.
///
/// `x^a / x_F ∈ I` exactly when some generator `g | x^a` has `g_i < a_i`
/// for all `i ∈ F`, so the facets are `supp(a)` minus the coordinates where
/// such a `g` is tight.
pub fn koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplex> {
    a.check_ambient(ideal.n())?;
    if ideal.n() > MAX_VARS {
        return Err(Error::TooManyVariables {
            max: MAX_VARS,
            found: ideal.n(),
        });
    }
    Ok(koszul_unchecked(ideal, a))
}

fn koszul_unchecked(ideal: &MonomialIdeal, a: &Monomial) -> SimplicialComplex {
    let support = a.support_mask();
    let facets = ideal.generators().iter().filter(|g| g.divides(a)).map(|g| {
        let tight = g
            .exponents()
            .iter()
            .zip(a.exponents())
            .enumerate()
            .filter(|(_, (gi, ai))| gi == ai && **ai > 0)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        support & !tight
    });
    SimplicialComplex::from_facets(support, facets)
}

/// Nonzero multigraded Betti numbers of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    n: usize,
    field: Field,
    #[serde(with = "entry_list")]
    entries: BTreeMap<(usize, Monomial), usize>,
}

/// One `β_{i,a}` row of the serialized table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub multidegree: Monomial,
    pub rank: usize,
}

mod entry_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        entries: &BTreeMap<(usize, Monomial), usize>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<BettiEntry> = entries
            .iter()
            .map(|((i, a), &rank)| BettiEntry {
                i: *i,
                multidegree: a.clone(),
                rank,
            })
            .collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<(usize, Monomial), usize>, D::Error> {
        let list = Vec::<BettiEntry>::deserialize(d)?;
        Ok(list
            .into_iter()
            .map(|e| ((e.i, e.multidegree), e.rank))
            .collect())
    }
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `β_{i,a}`, zero when absent.
    pub fn get(&self, i: usize, a: &Monomial) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, a), &r)| (*i, a, r))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Totalized `β_{i,j}` with `j = |a|`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), &r) in &self.entries {
            *out.entry((*i, a.degree())).or_insert(0) += r;
        }
        out
    }

    /// Total `β_i` per homological index.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for ((i, _), &r) in &self.entries {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += r;
        }
        out
    }

    /// Distinct degrees of the minimal generators, ascending.
    pub fn generation_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .entries
            .keys()
            .filter(|(i, _)| *i == 0)
            .map(|(_, a)| a.degree())
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `max(|a| - i)` over nonzero entries.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, a)| a.degree() as i64 - *i as i64)
            .max()
            .unwrap_or(0)
    }

    fn single_degree(&self) -> Option<u32> {
        match self.generation_degrees()[..] {
            [d] => Some(d),
            _ => None,
        }
    }

    /// Every nonzero `β_{i,a}` has `|a| = i + d`.
    pub fn is_linear(&self) -> bool {
        let Some(d) = self.single_degree() else {
            return false;
        };
        self.entries
            .keys()
            .all(|(i, a)| a.degree() as usize == *i + d as usize)
    }

    /// Every nonzero `β_{1,a}` has `|a| = d + 1`.
    pub fn is_linearly_related(&self) -> bool {
        let Some(d) = self.single_degree() else {
            return false;
        };
        self.entries
            .keys()
            .filter(|(i, _)| *i == 1)
            .all(|(_, a)| a.degree() == d + 1)
    }
}

/// Betti numbers over `field`, refusing ideals with more than
/// [`DEFAULT_GENERATOR_CAP`] generators.
pub fn betti_numbers(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    betti_numbers_with_cap(ideal, field, DEFAULT_GENERATOR_CAP)
}

pub fn betti_numbers_with_cap(
    ideal: &MonomialIdeal,
    field: Field,
    cap: usize,
) -> Result<BettiTable> {
    check_ideal(ideal, cap)?;
    let lattice = lcm_lattice(ideal)?;
    let at = |a: &Monomial| -> Vec<((usize, Monomial), usize)> {
        koszul_unchecked(ideal, a)
            .reduced_homology(field)
            .into_iter()
            .enumerate()
            .filter(|&(_, r)| r > 0)
            .map(|(i, r)| ((i, a.clone()), r))
            .collect()
    };
    let entries: BTreeMap<(usize, Monomial), usize> = if lattice.len() >= PARALLEL_THRESHOLD {
        lattice.par_iter().flat_map_iter(at).collect()
    } else {
        lattice.iter().flat_map(at).collect()
    };
    Ok(BettiTable {
        n: ideal.n(),
        field,
        entries,
    })
}

/// Linear resolution, stopping at the first off-diagonal Betti number.
/// Ideals not generated in one degree are reported as non-linear.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    has_linear_resolution_with_cap(ideal, field, DEFAULT_GENERATOR_CAP)
}

pub fn has_linear_resolution_with_cap(
    ideal: &MonomialIdeal,
    field: Field,
    cap: usize,
) -> Result<bool> {
    check_ideal(ideal, cap)?;
    let Some(d) = ideal.equigenerated_degree()? else {
        return Ok(false);
    };
    let lattice = lcm_lattice(ideal)?;
    Ok(lattice.iter().all(|a| {
        let i = a.degree() as usize - d as usize;
        koszul_unchecked(ideal, a)
            .reduced_homology(field)
            .iter()
            .enumerate()
            .all(|(k, &r)| r == 0 || k == i)
    }))
}

/// Linearly related: all first syzygies live in degree `d + 1`. Only
/// `H̃_0` of the Koszul complexes is needed, which does not depend on the
/// field.
pub fn is_linearly_related(ideal: &MonomialIdeal) -> Result<bool> {
    is_linearly_related_with_cap(ideal, DEFAULT_GENERATOR_CAP)
}

pub fn is_linearly_related_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<bool> {
    check_ideal(ideal, cap)?;
    let Some(d) = ideal.equigenerated_degree()? else {
        return Ok(false);
    };
    let lattice = lcm_lattice(ideal)?;
    Ok(lattice
        .iter()
        .filter(|a| a.degree() > d + 1)
        .all(|a| koszul_unchecked(ideal, a).reduced_h0() == 0))
}

pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<i64> {
    Ok(betti_numbers(ideal, field)?.regularity())
}
