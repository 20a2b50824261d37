//! The exchange property and the alternating-path exchange witness for
//! last matching powers of graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, WeightedOrientedGraph};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::powers::decompose_generator;

/// A pair of generators and a variable for which no exchange exists:
/// `deg_i(u) > deg_i(v)` and no `j` with `deg_j(u) < deg_j(v)` has
/// `x_j u / x_i` in `G(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeFailure {
    pub u: Monomial,
    pub v: Monomial,
    pub i: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExchangeOutcome {
    Polymatroidal,
    NotEquigenerated,
    Failure(ExchangeFailure),
}

impl ExchangeOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ExchangeOutcome::Polymatroidal)
    }
}

/// Decides the exchange property over all ordered pairs of generators,
/// stopping at the first failure. The zero and unit ideals count as
/// polymatroidal.
pub fn exchange_check(ideal: &MonomialIdeal) -> ExchangeOutcome {
    if ideal.is_zero() || ideal.is_unit() {
        return ExchangeOutcome::Polymatroidal;
    }
    if ideal
        .equigenerated_degree()
        .expect("nonzero ideal")
        .is_none()
    {
        return ExchangeOutcome::NotEquigenerated;
    }
    if ideal.is_squarefree() && ideal.n() <= BITMAP_VARS {
        return squarefree_exchange_check(ideal);
    }
    generic_exchange_check(ideal)
}

fn generic_exchange_check(ideal: &MonomialIdeal) -> ExchangeOutcome {
    let members = ideal.generator_set();
    let gens = ideal.generators();
    let n = ideal.n();
    for u in gens {
        for v in gens {
            if u == v {
                continue;
            }
            for i in 0..n {
                if u.exponent(i) <= v.exponent(i) {
                    continue;
                }
                let exchanged = (0..n).any(|j| {
                    u.exponent(j) < v.exponent(j)
                        && u.exchange(i, j).is_some_and(|w| members.contains(&w))
                });
                if !exchanged {
                    return ExchangeOutcome::Failure(ExchangeFailure {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                    });
                }
            }
        }
    }
    ExchangeOutcome::Polymatroidal
}

/// Largest ambient size for which squarefree generators are looked up in
/// a `2^n`-bit table rather than a hash set.
const BITMAP_VARS: usize = 20;

/// Same contract as [`exchange_check`] for equigenerated squarefree ideals,
/// with generators as bitmasks.
fn squarefree_exchange_check(ideal: &MonomialIdeal) -> ExchangeOutcome {
    let masks: Vec<u64> = ideal.generators().iter().map(|g| g.support_mask()).collect();
    let mut table = vec![0u64; (1usize << ideal.n()).div_ceil(64)];
    for &m in &masks {
        table[(m / 64) as usize] |= 1 << (m % 64);
    }
    let member = |m: u64| table[(m / 64) as usize] >> (m % 64) & 1 == 1;
    for (ui, &u) in masks.iter().enumerate() {
        for (vi, &v) in masks.iter().enumerate() {
            let (only_u, only_v) = (u & !v, v & !u);
            if ui == vi {
                continue;
            }
            let mut rest = only_u;
            while rest != 0 {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                let base = u & !(1 << i);
                let mut js = only_v;
                let mut found = false;
                while js != 0 {
                    let j = js.trailing_zeros();
                    js &= js - 1;
                    if member(base | 1 << j) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return ExchangeOutcome::Failure(ExchangeFailure {
                        u: ideal.generators()[ui].clone(),
                        v: ideal.generators()[vi].clone(),
                        i: i as usize,
                    });
                }
            }
        }
    }
    ExchangeOutcome::Polymatroidal
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    exchange_check(ideal).holds()
}

/// Squarefree and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> bool {
    ideal.is_squarefree() && is_polymatroidal(ideal)
}

/// For `u, v` in `G(I(G)^[ν(G)])` and `deg_i(u) > deg_i(v)`, returns a `j`
/// with `deg_j(u) < deg_j(v)` and `x_j u / x_i` in `G(I(G)^[ν(G)])`.
///
/// Decomposes `u` and `v` into maximum matchings `M_u`, `M_v` and walks
/// the alternating path starting at the `M_u`-edge `{i, h}`: from `h` along
/// `M_v` to `i_1`, from `i_1` along `M_u` to `j_1`, and so on, until it
/// reaches a vertex `i_p` not covered by `M_u`. The walk takes at most
/// `ν(G)` steps.
pub fn exchange_witness_last_power(
    g: &SimpleGraph,
    u: &Monomial,
    v: &Monomial,
    i: usize,
) -> Result<usize> {
    let nu = g.matching_number();
    let d = WeightedOrientedGraph::from_simple(g);
    for w in [u, v] {
        w.check_ambient(g.n())?;
        if !w.is_squarefree() || w.degree() as usize != 2 * nu {
            return Err(Error::Precondition(format!(
                "{w} is not a generator of the last matching power"
            )));
        }
    }
    if i >= g.n() || u.exponent(i) <= v.exponent(i) {
        return Err(Error::Precondition(format!(
            "need deg_x{}(u) > deg_x{}(v)",
            i + 1,
            i + 1
        )));
    }
    let mu = decompose_generator(&d, u, nu)?;
    let mv = decompose_generator(&d, v, nu)?;
    let covered_by_u = mu.vertices();

    let other = |(a, b): (usize, usize), x: usize| if a == x { b } else { a };
    let (a, b) = mu.edge_at(i).expect("i divides u");
    let mut h = other((a, b), i);
    for _ in 0..nu {
        let f = mv.edge_at(h).ok_or_else(|| {
            Error::Precondition(format!("vertex {h} uncovered by M_v; ν(G) is not maximal"))
        })?;
        let next = other(f, h);
        if !covered_by_u.contains(next) {
            return Ok(next);
        }
        let e = mu.edge_at(next).expect("covered by M_u");
        h = other(e, next);
    }
    Err(Error::Precondition(
        "alternating walk did not terminate within ν(G) steps".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powers::{edge_ideal, matching_power};

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_slice(e)
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| m(g)), n).unwrap()
    }

    fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    fn last_power(g: &SimpleGraph) -> MonomialIdeal {
        let i = edge_ideal(&WeightedOrientedGraph::from_simple(g));
        matching_power(&i, g.matching_number()).unwrap()
    }

    #[test]
    fn polymatroidal_examples() {
        let i = ideal(4, &[&[1, 0, 0, 2], &[0, 1, 0, 2], &[0, 0, 1, 2]]);
        assert!(is_polymatroidal(&i));

        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            exchange_check(&i),
            ExchangeOutcome::Failure(ExchangeFailure {
                u: m(&[1, 1, 0, 0]),
                v: m(&[0, 0, 1, 1]),
                i: 0
            })
        );

        assert!(is_polymatroidal(&ideal(4, &[&[1, 1, 1, 1]])));
        assert!(is_polymatroidal(&MonomialIdeal::zero(3)));
        assert!(is_polymatroidal(&MonomialIdeal::unit(3)));
        assert_eq!(
            exchange_check(&ideal(3, &[&[1, 0, 2], &[0, 1, 1]])),
            ExchangeOutcome::NotEquigenerated
        );
    }

    #[test]
    fn matroidal_examples() {
        assert!(is_matroidal(&last_power(&path(5))));
        assert!(!is_matroidal(&ideal(4, &[&[1, 0, 0, 2], &[0, 1, 0, 2]])));
        let p4 = last_power(&path(4));
        assert_eq!(p4, ideal(4, &[&[1, 1, 1, 1]]));
        assert!(is_matroidal(&p4));
    }

    #[test]
    fn bitmap_path_matches_generic() {
        // every equigenerated squarefree ideal of degree 2 in 5 variables
        let pairs: Vec<Monomial> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| Monomial::squarefree(5, &[a, b])))
            .collect();
        for subset in 1u32..1 << pairs.len() {
            let gens = (0..pairs.len())
                .filter(|&k| subset >> k & 1 == 1)
                .map(|k| pairs[k].clone());
            let i = MonomialIdeal::minimalize(gens, 5).unwrap();
            assert_eq!(squarefree_exchange_check(&i), generic_exchange_check(&i));
        }
    }

    #[test]
    fn witness_on_p5() {
        let j = exchange_witness_last_power(&path(5), &m(&[1, 1, 1, 1, 0]), &m(&[0, 1, 1, 1, 1]), 0)
            .unwrap();
        assert_eq!(j, 4);
    }

    #[test]
    fn witness_on_p7() {
        let g = path(7);
        let u = m(&[1, 1, 1, 1, 1, 1, 0]);
        let v = m(&[0, 1, 1, 1, 1, 1, 1]);
        let j = exchange_witness_last_power(&g, &u, &v, 0).unwrap();
        assert_eq!(j, 6);
        let last = last_power(&g);
        assert!(last.generators().contains(&u.exchange(0, j).unwrap()));
    }

    #[test]
    fn witness_rejects_bad_input() {
        let g = path(5);
        let u = m(&[1, 1, 1, 1, 0]);
        assert!(exchange_witness_last_power(&g, &u, &u, 0).is_err());
        assert!(exchange_witness_last_power(&g, &m(&[1, 1, 0, 0, 0]), &u, 0).is_err());
    }
}
