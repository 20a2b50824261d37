//! Recursive classification of weighted oriented forests whose last
//! matching power is polymatroidal, with replayable certificates.
//!
//! At every level the classifier picks one distant configuration (or an
//! isolated edge), records which branch applied, and recurses on a
//! smaller forest whose matching number is exactly one less.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Configuration, DistantConfiguration, SimpleGraph, VertexSet, WeightedOrientedGraph};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polymatroid::is_polymatroidal;
use crate::powers::{edge_ideal, edge_monomial, matching_power};

/// The condition of the configuration branch that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// The graph has no edges.
    NoEdges,
    /// Some leaf `a_i` has weight other than 1.
    Alpha,
    /// The last power of `D \ b` is not polymatroidal.
    Beta,
    /// `I(D \ {b,c})^[ν-1] = 0` and the edges `{a_i, b}` do not share one
    /// exponent on `b`.
    Gamma,
    /// `I(D \ {b,c})^[ν-1] != 0` and either the weights are wrong or the
    /// last power of `D \ {b,c}` is not polymatroidal.
    Delta,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::NoEdges => "no-edges",
            Condition::Alpha => "α",
            Condition::Beta => "β",
            Condition::Gamma => "γ",
            Condition::Delta => "δ",
        })
    }
}

/// One node of a classification trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Trace {
    /// `{a, b}` is an isolated edge; recurse on `D \ {a, b}`.
    D1 {
        a: usize,
        b: usize,
        child: Arc<Certificate>,
    },
    /// `{a, b}` with `a` a leaf of the configuration is strong; recurse on
    /// `D \ {a, b}`.
    D2 {
        config: Configuration,
        strong: (usize, usize),
        child: Arc<Certificate>,
    },
    /// `I(D)^[ν] = x_b^δ (x_{a_1}, ..., x_{a_t}) I(D \ b)^[ν-1]`.
    D3i {
        config: Configuration,
        delta: u32,
        without_b: Arc<Certificate>,
    },
    /// `I(D)^[ν] = x_b^{w(b)} [(x_{a_i}) I(D \ b)^[ν-1] + x_c I(D \ {b,c})^[ν-1]]`.
    D3ii {
        config: Configuration,
        without_b: Arc<Certificate>,
        without_bc: Arc<Certificate>,
    },
    /// Every arc head has weight 1, so `I(D) = I(G)`.
    BaseUnweighted,
    /// `ν = 1`; the exchange property was checked on `I(D)` directly.
    BaseNu1 { polymatroidal: bool },
    Refuted {
        condition: Condition,
        locus: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        config: Option<Configuration>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        child: Option<Arc<Certificate>>,
    },
}

/// Verdict on `D` together with the trace that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: bool,
    pub vertices: VertexSet,
    pub nu: usize,
    pub trace: Trace,
}

impl Certificate {
    /// Number of nodes along the recursion, counting this one.
    pub fn depth(&self) -> usize {
        1 + self.children().map(|c| c.depth()).max().unwrap_or(0)
    }

    pub fn children(&self) -> impl Iterator<Item = &Certificate> {
        let kids: Vec<&Certificate> = match &self.trace {
            Trace::D1 { child, .. } | Trace::D2 { child, .. } => vec![child],
            Trace::D3i { without_b, .. } => vec![without_b],
            Trace::D3ii {
                without_b,
                without_bc,
                ..
            } => vec![without_b, without_bc],
            Trace::Refuted { child: Some(c), .. } => vec![c],
            _ => Vec::new(),
        };
        kids.into_iter()
    }

    /// Short label of the root node, e.g. `D3i` or `Refuted(γ)`.
    pub fn label(&self) -> String {
        match &self.trace {
            Trace::D1 { .. } => "D1".into(),
            Trace::D2 { .. } => "D2".into(),
            Trace::D3i { .. } => "D3i".into(),
            Trace::D3ii { .. } => "D3ii".into(),
            Trace::BaseUnweighted => "BaseUnweighted".into(),
            Trace::BaseNu1 { .. } => "BaseNu1".into(),
            Trace::Refuted { condition, .. } => format!("Refuted({condition})"),
        }
    }

    /// Labels along the first-child chain, root first.
    pub fn spine(&self) -> Vec<String> {
        let mut out = vec![self.label()];
        let mut cur = self;
        while let Some(next) = cur.children().next() {
            out.push(next.label());
            cur = next;
        }
        out
    }
}

/// `D \ W`, with sources that lost their in-arcs reset to weight 1.
fn remove(d: &WeightedOrientedGraph, w: &[usize]) -> WeightedOrientedGraph {
    d.delete_vertices(w)
        .expect("removed vertices belong to the graph")
        .normalize_sources()
}

/// Exponent of `x_b` in `x_{a_i, b}`, per leaf.
fn leaf_exponents(d: &WeightedOrientedGraph, cfg: &Configuration) -> Vec<u32> {
    cfg.leaves
        .iter()
        .map(|&a| edge_monomial(d, a, cfg.b).expect("leaf edge").exponent(cfg.b))
        .collect()
}

fn heavy_leaves(d: &WeightedOrientedGraph, cfg: &Configuration) -> Vec<usize> {
    cfg.leaves
        .iter()
        .copied()
        .filter(|&a| d.weight(a) != 1)
        .collect()
}

fn common(values: &[u32]) -> Option<u32> {
    let first = *values.first()?;
    values.iter().all(|&v| v == first).then_some(first)
}

/// The weight conditions of the split sub-case: every `x_{a_i, b}` is
/// `x_{a_i} x_b^{w(b)}`, `w(c) = 1`, and `x_{b,c} = x_c x_b^{w(b)}`.
fn split_weights_hold(d: &WeightedOrientedGraph, cfg: &Configuration) -> bool {
    let wb = d.weight(cfg.b);
    let n = d.n();
    let bc = edge_monomial(d, cfg.b, cfg.c).expect("configuration edge");
    common(&leaf_exponents(d, cfg)) == Some(wb)
        && d.weight(cfg.c) == 1
        && bc == &Monomial::var(n, cfg.c) * &Monomial::var_pow(n, cfg.b, wb)
}

fn strong_leaf(g: &SimpleGraph, cfg: &Configuration) -> Option<usize> {
    cfg.leaves
        .iter()
        .copied()
        .find(|&a| g.is_strong_edge(a, cfg.b).expect("leaf edge"))
}

/// Decides whether the last matching power `I(D)^[ν(G)]` is polymatroidal.
///
/// `D` must be normalized and its underlying graph a forest.
pub fn classify_last_power(d: &WeightedOrientedGraph) -> Result<Certificate> {
    if !d.is_forest() {
        return Err(Error::NotAForest);
    }
    if let Some(&(v, w)) = d.source_adjustments().first() {
        return Err(Error::NotNormalized(v, w));
    }
    let mut memo = HashMap::new();
    let cert = classify_rec(d, &mut memo);
    Ok(Arc::unwrap_or_clone(cert))
}

fn classify_rec(
    d: &WeightedOrientedGraph,
    memo: &mut HashMap<VertexSet, Arc<Certificate>>,
) -> Arc<Certificate> {
    if let Some(c) = memo.get(&d.vertices()) {
        return c.clone();
    }
    let cert = Arc::new(classify_node(d, memo));
    memo.insert(d.vertices(), cert.clone());
    cert
}

fn classify_node(
    d: &WeightedOrientedGraph,
    memo: &mut HashMap<VertexSet, Arc<Certificate>>,
) -> Certificate {
    let g = d.underlying();
    let nu = g.matching_number();
    let node = |verdict, trace| Certificate {
        verdict,
        vertices: d.vertices(),
        nu,
        trace,
    };
    let refuted = |condition, locus, config, child| {
        node(
            false,
            Trace::Refuted {
                condition,
                locus,
                config,
                child,
            },
        )
    };
    let mut sub = |w: &[usize]| {
        let child = classify_rec(&remove(d, w), memo);
        assert_eq!(child.nu + 1, nu, "matching number must drop by one");
        child
    };

    if g.edge_count() == 0 {
        return refuted(Condition::NoEdges, Vec::new(), None, None);
    }
    if d.has_trivial_weights() {
        return node(true, Trace::BaseUnweighted);
    }
    if nu == 1 {
        let p = is_polymatroidal(&edge_ideal(d));
        return node(p, Trace::BaseNu1 { polymatroidal: p });
    }
    let cfg = match g
        .find_distant_configuration()
        .expect("forests always have a distant configuration")
    {
        DistantConfiguration::NoEdges => unreachable!("edges checked above"),
        DistantConfiguration::IsolatedEdge(a, b) => {
            let child = sub(&[a, b]);
            return node(child.verdict, Trace::D1 { a, b, child });
        }
        DistantConfiguration::Config(cfg) => cfg,
    };
    if let Some(a) = strong_leaf(g, &cfg) {
        let child = sub(&[a, cfg.b]);
        return node(
            child.verdict,
            Trace::D2 {
                strong: (a, cfg.b),
                config: cfg,
                child,
            },
        );
    }

    let heavy = heavy_leaves(d, &cfg);
    if !heavy.is_empty() {
        return refuted(Condition::Alpha, heavy, Some(cfg), None);
    }
    let without_b = sub(&[cfg.b]);
    if !without_b.verdict {
        return refuted(Condition::Beta, vec![cfg.b], Some(cfg), Some(without_b));
    }
    let bc_nu = g
        .delete(VertexSet::from_iter([cfg.b, cfg.c]))
        .expect("configuration vertices")
        .matching_number();
    if bc_nu + 1 < nu {
        return match common(&leaf_exponents(d, &cfg)) {
            Some(delta) => node(
                true,
                Trace::D3i {
                    config: cfg,
                    delta,
                    without_b,
                },
            ),
            None => refuted(Condition::Gamma, cfg.leaves.clone(), Some(cfg), None),
        };
    }
    let locus = vec![cfg.b, cfg.c];
    if !split_weights_hold(d, &cfg) {
        return refuted(Condition::Delta, locus, Some(cfg), None);
    }
    let without_bc = sub(&[cfg.b, cfg.c]);
    if !without_bc.verdict {
        return refuted(Condition::Delta, locus, Some(cfg), Some(without_bc));
    }
    node(
        true,
        Trace::D3ii {
            config: cfg,
            without_b,
            without_bc,
        },
    )
}

/// Replays a certificate against `D`.
///
/// Every positive node has both sides of its factorization recomputed from
/// scratch; refuted nodes have their failed condition re-checked. Returns
/// `Ok(false)` when a claim does not hold and an error when the certificate
/// does not even describe `D` (wrong vertex sets, configurations that are
/// not distant configurations of the graph, out of range vertices).
pub fn verify_certificate(d: &WeightedOrientedGraph, cert: &Certificate) -> Result<bool> {
    if !d.is_forest() {
        return Err(Error::NotAForest);
    }
    let d = d.normalize_sources();
    let mut memo = HashMap::new();
    verify_rec(&d, cert, &mut memo)
}

fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::MalformedCertificate(msg.into()))
}

fn last_power(d: &WeightedOrientedGraph, nu: usize) -> MonomialIdeal {
    matching_power(&edge_ideal(d), nu).expect("within variable limit")
}

fn verify_rec(
    d: &WeightedOrientedGraph,
    cert: &Certificate,
    memo: &mut HashMap<(VertexSet, *const Certificate), bool>,
) -> Result<bool> {
    if cert.vertices != d.vertices() {
        return malformed(format!(
            "node over {:?} replayed against {:?}",
            cert.vertices,
            d.vertices()
        ));
    }
    let key = (d.vertices(), cert as *const Certificate);
    if let Some(&ok) = memo.get(&key) {
        return Ok(ok);
    }
    let ok = verify_node(d, cert, memo)?;
    memo.insert(key, ok);
    Ok(ok)
}

fn check_config(g: &SimpleGraph, cfg: &Configuration) -> Result<()> {
    if g.all_distant_configurations().contains(cfg) {
        Ok(())
    } else {
        malformed(format!("{cfg:?} is not a distant configuration"))
    }
}

fn check_vertices(d: &WeightedOrientedGraph, vs: &[usize]) -> Result<()> {
    match vs.iter().find(|&&v| !d.vertices().contains(v)) {
        Some(v) => malformed(format!("vertex {v} is not in the graph")),
        None => Ok(()),
    }
}

fn verify_node(
    d: &WeightedOrientedGraph,
    cert: &Certificate,
    memo: &mut HashMap<(VertexSet, *const Certificate), bool>,
) -> Result<bool> {
    let g = d.underlying();
    let nu = g.matching_number();
    if cert.nu != nu {
        return Ok(false);
    }
    let n = d.n();
    let mut child_ok = |w: &[usize], child: &Certificate| -> Result<bool> {
        let sub = remove(d, w);
        Ok(child.nu + 1 == nu && verify_rec(&sub, child, memo)?)
    };

    match &cert.trace {
        Trace::BaseUnweighted => Ok(cert.verdict && g.edge_count() > 0 && d.has_trivial_weights()),
        Trace::BaseNu1 { polymatroidal } => {
            let p = nu == 1 && is_polymatroidal(&edge_ideal(d));
            Ok(nu == 1 && p == *polymatroidal && cert.verdict == p)
        }
        Trace::D1 { a, b, child } => {
            check_vertices(d, &[*a, *b])?;
            if !g.has_edge(*a, *b) {
                return malformed(format!("{{{a}, {b}}} is not an edge"));
            }
            if !(g.is_leaf(*a) && g.is_leaf(*b)) || cert.verdict != child.verdict {
                return Ok(false);
            }
            if !child_ok(&[*a, *b], child)? {
                return Ok(false);
            }
            factor_through_edge(d, *a, *b, nu)
        }
        Trace::D2 {
            config,
            strong: (a, b),
            child,
        } => {
            check_config(g, config)?;
            if *b != config.b || !config.leaves.contains(a) {
                return malformed("strong edge is not a leaf edge of the configuration");
            }
            if !g.is_strong_edge(*a, *b)? || cert.verdict != child.verdict {
                return Ok(false);
            }
            if !child_ok(&[*a, *b], child)? {
                return Ok(false);
            }
            factor_through_edge(d, *a, *b, nu)
        }
        Trace::D3i {
            config,
            delta,
            without_b,
        } => {
            check_config(g, config)?;
            let b = config.b;
            let bc_nu = g.delete(VertexSet::from_iter([b, config.c]))?.matching_number();
            let conditions = cert.verdict
                && without_b.verdict
                && strong_leaf(g, config).is_none()
                && heavy_leaves(d, config).is_empty()
                && bc_nu + 1 < nu
                && common(&leaf_exponents(d, config)) == Some(*delta);
            if !conditions || !child_ok(&[b], without_b)? {
                return Ok(false);
            }
            let lhs = last_power(d, nu);
            let rhs = MonomialIdeal::variables(n, &config.leaves)
                .product(&last_power(&remove(d, &[b]), nu - 1))?
                .scale(&Monomial::var_pow(n, b, *delta))?;
            lhs.ideal_equals(&rhs)
        }
        Trace::D3ii {
            config,
            without_b,
            without_bc,
        } => {
            check_config(g, config)?;
            let (b, c) = (config.b, config.c);
            let bc_nu = g.delete(VertexSet::from_iter([b, c]))?.matching_number();
            let conditions = cert.verdict
                && without_b.verdict
                && without_bc.verdict
                && strong_leaf(g, config).is_none()
                && heavy_leaves(d, config).is_empty()
                && bc_nu + 1 == nu
                && split_weights_hold(d, config);
            if !conditions || !child_ok(&[b], without_b)? || !child_ok(&[b, c], without_bc)? {
                return Ok(false);
            }
            let lhs = last_power(d, nu);
            let left = MonomialIdeal::variables(n, &config.leaves)
                .product(&last_power(&remove(d, &[b]), nu - 1))?;
            let right = last_power(&remove(d, &[b, c]), nu - 1).scale(&Monomial::var(n, c))?;
            let rhs = left
                .sum(&right)?
                .scale(&Monomial::var_pow(n, b, d.weight(b)))?;
            lhs.ideal_equals(&rhs)
        }
        Trace::Refuted {
            condition,
            locus,
            config,
            child,
        } => {
            check_vertices(d, locus)?;
            if cert.verdict {
                return Ok(false);
            }
            if *condition == Condition::NoEdges {
                return Ok(g.edge_count() == 0);
            }
            let Some(cfg) = config else {
                return malformed("refuted configuration node without a configuration");
            };
            check_config(g, cfg)?;
            if g.edge_count() == 0
                || d.has_trivial_weights()
                || nu < 2
                || strong_leaf(g, cfg).is_some()
            {
                return Ok(false);
            }
            let (b, c) = (cfg.b, cfg.c);
            let bc_nu = g.delete(VertexSet::from_iter([b, c]))?.matching_number();
            match condition {
                Condition::NoEdges => unreachable!(),
                Condition::Alpha => Ok(!locus.is_empty()
                    && locus
                        .iter()
                        .all(|&a| cfg.leaves.contains(&a) && d.weight(a) != 1)),
                Condition::Beta => match child {
                    Some(ch) => Ok(!ch.verdict && child_ok(&[b], ch)?),
                    None => malformed("β refutation needs the certificate of D \\ b"),
                },
                Condition::Gamma => {
                    Ok(bc_nu + 1 < nu && common(&leaf_exponents(d, cfg)).is_none())
                }
                Condition::Delta => {
                    if bc_nu + 1 != nu {
                        return Ok(false);
                    }
                    match child {
                        None => Ok(!split_weights_hold(d, cfg)),
                        Some(ch) => Ok(!ch.verdict && child_ok(&[b, c], ch)?),
                    }
                }
            }
        }
    }
}

/// `I(D)^[ν] = x_{a,b} I(D \ {a, b})^[ν-1]`.
fn factor_through_edge(d: &WeightedOrientedGraph, a: usize, b: usize, nu: usize) -> Result<bool> {
    let lhs = last_power(d, nu);
    let rhs = last_power(&remove(d, &[a, b]), nu - 1).scale(&edge_monomial(d, a, b)?)?;
    lhs.ideal_equals(&rhs)
}

/// Strong-edge test for a distant configuration that avoids recomputing
/// the matching number of `G` minus an edge: `{a_1, b}` is strong iff
/// `t = 1` and every `(ν(G)-1)`-matching of `G \ b` covers `c`.
pub fn strong_edge_criterion(g: &SimpleGraph, cfg: &Configuration) -> Result<bool> {
    let nu = g.matching_number();
    if nu < 2 {
        return Err(Error::Precondition(format!("need ν(G) >= 2, got {nu}")));
    }
    if !g.all_distant_configurations().contains(cfg) {
        return Err(Error::Precondition(format!(
            "{cfg:?} is not a distant configuration"
        )));
    }
    if cfg.t() != 1 {
        return Ok(false);
    }
    let rest = g.delete(VertexSet::singleton(cfg.b))?;
    Ok(rest
        .matchings(nu - 1)
        .iter()
        .all(|m| m.vertices().contains(cfg.c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    // a1=0, a2=1, b=2, c=3, e1=4, e2=5
    fn double_star(b_to_a2: bool) -> WeightedOrientedGraph {
        let a2 = if b_to_a2 { (2, 1) } else { (1, 2) };
        WeightedOrientedGraph::from_arcs(6, &[(0, 2), a2, (2, 3), (3, 4), (3, 5)], &[1, 1, 2, 1, 1, 1])
            .unwrap()
    }

    fn seven_vertex_forest() -> WeightedOrientedGraph {
        WeightedOrientedGraph::from_arcs(
            7,
            &[(2, 0), (3, 0), (3, 1), (4, 1), (5, 3), (6, 3)],
            &[2, 2, 1, 1, 1, 1, 1],
        )
        .unwrap()
    }

    #[test]
    fn double_star_true_case() {
        let d = double_star(false);
        let cert = classify_last_power(&d).unwrap();
        assert!(cert.verdict);
        assert!(matches!(cert.trace, Trace::D3i { delta: 2, .. }));
        assert!(verify_certificate(&d, &cert).unwrap());
        assert!(is_polymatroidal(&last_power(&d, 2)));
    }

    #[test]
    fn double_star_delta_mismatch() {
        let d = double_star(true);
        let cert = classify_last_power(&d).unwrap();
        assert!(!cert.verdict);
        assert_eq!(cert.label(), "Refuted(γ)");
        assert!(verify_certificate(&d, &cert).unwrap());
        let p = last_power(&d, 2);
        assert_eq!(p.equigenerated_degree().unwrap(), None);
    }

    #[test]
    fn seven_vertex_forest_certificate() {
        let d = seven_vertex_forest();
        let cert = classify_last_power(&d).unwrap();
        assert!(cert.verdict);
        assert_eq!(cert.depth(), 3);
        assert_eq!(cert.spine().last().unwrap(), "BaseUnweighted");
        assert!(verify_certificate(&d, &cert).unwrap());
    }

    #[test]
    fn tampered_delta_fails() {
        let d = double_star(false);
        let mut cert = classify_last_power(&d).unwrap();
        if let Trace::D3i { delta, .. } = &mut cert.trace {
            *delta = 1;
        }
        assert!(!verify_certificate(&d, &cert).unwrap());
    }

    #[test]
    fn flipped_verdict_fails() {
        let d = double_star(true);
        let mut cert = classify_last_power(&d).unwrap();
        cert.verdict = true;
        assert!(!verify_certificate(&d, &cert).unwrap());
    }

    #[test]
    fn certificate_for_wrong_graph_is_malformed() {
        let cert = classify_last_power(&seven_vertex_forest()).unwrap();
        assert!(matches!(
            verify_certificate(&double_star(false), &cert),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn rejects_bad_input() {
        let cycle = WeightedOrientedGraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)], &[1, 1, 1]).unwrap();
        assert!(matches!(classify_last_power(&cycle), Err(Error::NotAForest)));
        let d = WeightedOrientedGraph::from_arcs(2, &[(0, 1)], &[3, 1]).unwrap();
        assert!(matches!(classify_last_power(&d), Err(Error::NotNormalized(0, 3))));
    }

    #[test]
    fn edgeless_is_refuted() {
        let d = WeightedOrientedGraph::from_arcs(3, &[], &[1, 1, 1]).unwrap();
        let cert = classify_last_power(&d).unwrap();
        assert_eq!(cert.label(), "Refuted(no-edges)");
        assert!(verify_certificate(&d, &cert).unwrap());
    }

    #[test]
    fn split_case_needs_head_weight_on_b() {
        // 0->1 (w=2), 1->2, 2-3, 3-4: the unweighted-looking rule on c alone
        // would accept this, but I(D)^[2] is not equigenerated.
        let d = WeightedOrientedGraph::from_arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], &[1, 2, 1, 1, 1])
            .unwrap();
        let cert = classify_last_power(&d).unwrap();
        assert!(!cert.verdict);
        assert!(verify_certificate(&d, &cert).unwrap());
        assert!(!is_polymatroidal(&last_power(&d, 2)));
    }

    fn path(n: usize) -> SimpleGraph {
        let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        SimpleGraph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn strong_edge_criterion_examples() {
        let cfg = Configuration {
            leaves: vec![0],
            b: 1,
            c: 2,
        };
        assert!(strong_edge_criterion(&path(4), &cfg).unwrap());
        assert!(path(4).is_strong_edge(0, 1).unwrap());

        let ds = double_star(false);
        let cfg = Configuration {
            leaves: vec![0, 1],
            b: 2,
            c: 3,
        };
        assert!(!strong_edge_criterion(ds.underlying(), &cfg).unwrap());

        // broom: edges {1,2},{2,3},{3,4},{3,5} (0-based below)
        let broom = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let cfg = Configuration {
            leaves: vec![3, 4],
            b: 2,
            c: 1,
        };
        assert!(!strong_edge_criterion(&broom, &cfg).unwrap());
    }

    #[test]
    fn strong_edge_criterion_preconditions() {
        let star = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let cfg = Configuration {
            leaves: vec![0],
            b: 1,
            c: 2,
        };
        assert!(strong_edge_criterion(&star, &cfg).is_err());
        let bogus = Configuration {
            leaves: vec![1],
            b: 0,
            c: 2,
        };
        assert!(strong_edge_criterion(&path(4), &bogus).is_err());
    }

    #[test]
    fn certificate_round_trips_through_json() {
        let d = seven_vertex_forest();
        let cert = classify_last_power(&d).unwrap();
        let text = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        assert!(verify_certificate(&d, &back).unwrap());
    }
}
