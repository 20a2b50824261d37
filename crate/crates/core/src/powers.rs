//! Edge ideals of weighted oriented graphs and matching powers `I^[k]`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{edge_key, Matching, WeightedOrientedGraph};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MAX_VARS};

/// Generator count above which the first level of the subset search is
/// spread over the rayon pool.
const PARALLEL_THRESHOLD: usize = 48;

/// The monomial of the underlying edge `{a, b}`: `x_a x_b^{w(b)}` when the
/// arc is `(a, b)`, `x_b x_a^{w(a)}` when it is `(b, a)`.
pub fn edge_monomial(d: &WeightedOrientedGraph, a: usize, b: usize) -> Result<Monomial> {
    let (tail, head) = d.arc_between(a, b).ok_or(Error::NotAnEdge(a, b))?;
    if !d.vertices().contains(tail) || !d.vertices().contains(head) {
        return Err(Error::NotAnEdge(a, b));
    }
    let mut m = Monomial::var(d.n(), tail);
    m = &m * &Monomial::var_pow(d.n(), head, d.weight(head));
    Ok(m)
}

/// `I(D) = (x_i x_j^{w_j} : (i, j) in E(D))`.
pub fn edge_ideal(d: &WeightedOrientedGraph) -> MonomialIdeal {
    let gens = d
        .arcs()
        .iter()
        .map(|&(a, b)| edge_monomial(d, a, b).expect("arc of the graph"))
        .collect();
    MonomialIdeal::from_checked(gens, d.n())
}

fn check_packable(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.n() > MAX_VARS {
        return Err(Error::TooManyVariables {
            max: MAX_VARS,
            found: ideal.n(),
        });
    }
    Ok(())
}

/// The `k`-th matching power: products of `k` minimal generators with
/// pairwise disjoint supports, minimalized. `I^[0]` is the unit ideal and
/// `I^[k]` is zero for `k > ν(I)`.
///
/// Restricting to minimal generators is enough: any monomial of `I` is
/// divisible by a minimal generator whose support is no larger.
pub fn matching_power(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    check_packable(ideal)?;
    let n = ideal.n();
    if k == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    let gens = ideal.generators();
    if k > gens.len() {
        return Ok(MonomialIdeal::zero(n));
    }
    let masks: Vec<u64> = gens.iter().map(Monomial::support_mask).collect();

    let from_first = |first: usize| -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut chosen = vec![first];
        extend(gens, &masks, k, first + 1, masks[first], &mut chosen, &mut out);
        out
    };
    let products: Vec<Monomial> = if gens.len() >= PARALLEL_THRESHOLD {
        (0..gens.len()).into_par_iter().flat_map_iter(from_first).collect()
    } else {
        (0..gens.len()).flat_map(from_first).collect()
    };
    Ok(MonomialIdeal::from_checked(products, n))
}

fn extend(
    gens: &[Monomial],
    masks: &[u64],
    k: usize,
    start: usize,
    used: u64,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Monomial>,
) {
    if chosen.len() == k {
        let mut p = gens[chosen[0]].clone();
        for &i in &chosen[1..] {
            p = &p * &gens[i];
        }
        out.push(p);
        return;
    }
    let need = k - chosen.len();
    for i in start..gens.len() {
        if gens.len() - i < need {
            break;
        }
        if masks[i] & used != 0 {
            continue;
        }
        chosen.push(i);
        extend(gens, masks, k, i + 1, used | masks[i], chosen, out);
        chosen.pop();
    }
}

/// `I(D)^[k]` computed as the span of edge-monomial products over the
/// `k`-matchings of the underlying graph. Agrees with
/// `matching_power(&edge_ideal(d), k)`.
pub fn edge_ideal_matching_power(d: &WeightedOrientedGraph, k: usize) -> MonomialIdeal {
    let n = d.n();
    if k == 0 {
        return MonomialIdeal::unit(n);
    }
    let products = d
        .underlying()
        .matchings(k)
        .into_iter()
        .map(|m| matching_monomial(d, &m))
        .collect();
    MonomialIdeal::from_checked(products, n)
}

/// Product of the edge monomials of a matching.
pub fn matching_monomial(d: &WeightedOrientedGraph, m: &Matching) -> Monomial {
    m.edges().iter().fold(Monomial::one(d.n()), |acc, &(a, b)| {
        &acc * &edge_monomial(d, a, b).expect("matching edge of the graph")
    })
}

/// Monomial grade `ν(I)`: the largest number of minimal generators with
/// pairwise disjoint supports.
pub fn monomial_grade(ideal: &MonomialIdeal) -> Result<usize> {
    check_packable(ideal)?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let masks: Vec<u64> = ideal.generators().iter().map(Monomial::support_mask).collect();
    let mut best = 0;
    let all: Vec<usize> = (0..masks.len()).collect();
    grade_search(&masks, &all, 0, &mut best);
    Ok(best)
}

fn grade_search(masks: &[u64], candidates: &[usize], size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    for (pos, &i) in candidates.iter().enumerate() {
        // Remaining candidates cannot beat the incumbent.
        if size + candidates.len() - pos <= *best {
            return;
        }
        let next: Vec<usize> = candidates[pos + 1..]
            .iter()
            .copied()
            .filter(|&j| masks[i] & masks[j] == 0)
            .collect();
        grade_search(masks, &next, size + 1, best);
    }
}

/// A `k`-matching whose edge monomials multiply to `u`, the first one in
/// lexicographic edge order.
pub fn decompose_generator(d: &WeightedOrientedGraph, u: &Monomial, k: usize) -> Result<Matching> {
    u.check_ambient(d.n())?;
    let edges: Vec<((usize, usize), Monomial)> = d
        .underlying()
        .edges()
        .into_iter()
        .map(|(a, b)| ((a, b), edge_monomial(d, a, b).expect("edge of the graph")))
        .filter(|(_, m)| m.divides(u))
        .collect();

    fn rec(
        edges: &[((usize, usize), Monomial)],
        start: usize,
        rest: &Monomial,
        k: usize,
        chosen: &mut Vec<(usize, usize)>,
    ) -> bool {
        if chosen.len() == k {
            return rest.is_one();
        }
        for idx in start..edges.len() {
            let ((a, b), ref m) = edges[idx];
            if chosen.iter().any(|&(x, y)| x == a || x == b || y == a || y == b) {
                continue;
            }
            if let Some(r) = rest.checked_div(m) {
                chosen.push(edge_key(a, b));
                if rec(edges, idx + 1, &r, k, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::with_capacity(k);
    if rec(&edges, 0, u, k, &mut chosen) {
        Matching::new(chosen)
    } else {
        Err(Error::Precondition(format!(
            "{u} is not a product of the edge monomials of a {k}-matching"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_slice(e)
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| m(g)), n).unwrap()
    }

    fn path(n: usize) -> WeightedOrientedGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        WeightedOrientedGraph::from_simple(&SimpleGraph::from_edges(n, &edges).unwrap())
    }

    /// The seven-vertex forest a..g with (c,a),(d,a),(d,b),(e,b),(f,d),(g,d)
    /// and w(a) = w(b) = 2.
    fn seven() -> WeightedOrientedGraph {
        let names = ["a", "b", "c", "d", "e", "f", "g"].map(String::from).to_vec();
        WeightedOrientedGraph::new(
            names,
            vec![(2, 0), (3, 0), (3, 1), (4, 1), (5, 3), (6, 3)],
            vec![2, 2, 1, 1, 1, 1, 1],
        )
        .unwrap()
    }

    #[test]
    fn edge_ideal_examples() {
        let star =
            WeightedOrientedGraph::from_arcs(4, &[(0, 3), (1, 3), (2, 3)], &[1, 1, 1, 2]).unwrap();
        assert_eq!(
            edge_ideal(&star),
            ideal(4, &[&[1, 0, 0, 2], &[0, 1, 0, 2], &[0, 0, 1, 2]])
        );

        let got = edge_ideal(&seven());
        // (c a^2, d a^2, d b^2, e b^2, f d, g d)
        let want = ideal(
            7,
            &[
                &[2, 0, 1, 0, 0, 0, 0],
                &[2, 0, 0, 1, 0, 0, 0],
                &[0, 2, 0, 1, 0, 0, 0],
                &[0, 2, 0, 0, 1, 0, 0],
                &[0, 0, 0, 1, 0, 1, 0],
                &[0, 0, 0, 1, 0, 0, 1],
            ],
        );
        assert_eq!(got, want);
        assert_eq!(edge_ideal(&path(3)), ideal(3, &[&[1, 1, 0], &[0, 1, 1]]));
    }

    #[test]
    fn edge_monomial_examples() {
        let d = seven();
        assert_eq!(edge_monomial(&d, 2, 0).unwrap(), m(&[2, 0, 1, 0, 0, 0, 0]));
        assert_eq!(edge_monomial(&d, 0, 2).unwrap(), m(&[2, 0, 1, 0, 0, 0, 0]));
        assert_eq!(edge_monomial(&d, 5, 3).unwrap(), m(&[0, 0, 0, 1, 0, 1, 0]));
        assert_eq!(edge_monomial(&path(2), 0, 1).unwrap(), m(&[1, 1]));
        assert_eq!(edge_monomial(&d, 0, 1), Err(Error::NotAnEdge(0, 1)));
    }

    #[test]
    fn matching_power_examples() {
        let p5 = edge_ideal(&path(5));
        let got = matching_power(&p5, 2).unwrap();
        assert_eq!(
            got,
            ideal(5, &[&[1, 1, 1, 1, 0], &[1, 1, 0, 1, 1], &[0, 1, 1, 1, 1]])
        );

        let got = matching_power(&edge_ideal(&seven()), 3).unwrap();
        assert_eq!(
            got,
            ideal(7, &[&[2, 2, 1, 1, 1, 1, 0], &[2, 2, 1, 1, 1, 0, 1]])
        );

        let i = ideal(5, &[&[1, 0, 2, 0, 0], &[0, 1, 1, 0, 0], &[0, 0, 0, 1, 1]]);
        assert_eq!(
            matching_power(&i, 2).unwrap(),
            ideal(5, &[&[1, 0, 2, 1, 1], &[0, 1, 1, 1, 1]])
        );
    }

    #[test]
    fn matching_power_boundaries() {
        let p5 = edge_ideal(&path(5));
        assert!(matching_power(&p5, 0).unwrap().is_unit());
        assert!(matching_power(&p5, 3).unwrap().is_zero());
        assert!(matching_power(&MonomialIdeal::zero(3), 1).unwrap().is_zero());
        assert_eq!(matching_power(&p5, 1).unwrap(), p5);
    }

    #[test]
    fn both_routes_agree_on_the_seven_vertex_forest() {
        let d = seven();
        for k in 0..=4 {
            assert_eq!(
                matching_power(&edge_ideal(&d), k).unwrap(),
                edge_ideal_matching_power(&d, k),
                "k = {k}"
            );
        }
    }

    #[test]
    fn monomial_grade_examples() {
        let p5 = edge_ideal(&path(5));
        assert_eq!(monomial_grade(&p5).unwrap(), 2);
        assert_eq!(monomial_grade(&p5).unwrap(), path(5).matching_number());
        assert_eq!(
            monomial_grade(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]])).unwrap(),
            1
        );
        assert_eq!(monomial_grade(&edge_ideal(&seven())).unwrap(), 3);
        assert_eq!(
            monomial_grade(&MonomialIdeal::zero(2)),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn decompose_examples() {
        let got = decompose_generator(&path(5), &m(&[1, 1, 1, 1, 0]), 2).unwrap();
        assert_eq!(got.edges(), &[(0, 1), (2, 3)]);

        let got = decompose_generator(&seven(), &m(&[2, 2, 1, 1, 1, 1, 0]), 3).unwrap();
        // {c,a}, {e,b}, {f,d}
        assert_eq!(got.edges(), &[(0, 2), (1, 4), (3, 5)]);

        let got = decompose_generator(&path(2), &m(&[1, 1]), 1).unwrap();
        assert_eq!(got.edges(), &[(0, 1)]);

        assert!(decompose_generator(&path(5), &m(&[1, 0, 1, 1, 1]), 2).is_err());
    }
}
