//! Instance generation and the verification runs built on top of the
//! library: random and exhaustive forests, the recursive constructor of
//! forests with polymatroidal last power, and cross-validation of the
//! classifier against the exchange and Betti oracles.
//!
//! All randomness comes from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64`, so seeded runs are reproducible across platforms.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{classify_last_power, strong_edge_criterion, verify_certificate};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet, WeightedOrientedGraph};
use crate::homology::Field;
use crate::ideal::MonomialIdeal;
use crate::io::GraphDocument;
use crate::polymatroid::is_polymatroidal;
use crate::powers::{edge_ideal, matching_power};
use crate::resolution::{
    betti_numbers_with_cap, has_linear_resolution_with_cap, is_linearly_related_with_cap,
    DEFAULT_GENERATOR_CAP,
};

/// Name of the generator behind every seeded run.
pub const PRNG: &str = "ChaCha8 (rand_chacha 0.3), seed_from_u64";

/// Largest vertex count accepted by the exhaustive enumerators.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// How many failing instances a summary keeps verbatim.
const KEPT_FAILURES: usize = 20;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Random instances

/// A random forest on exactly `n` vertices: each vertex after the second
/// starts a new component with probability 1/4 and otherwise attaches to a
/// uniformly chosen earlier vertex. Every edge gets a random orientation,
/// every vertex a weight in `1..=w_max`; sources are then normalized.
pub fn random_forest_on(rng: &mut impl Rng, n: usize, w_max: u32) -> WeightedOrientedGraph {
    let mut arcs = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        if v > 1 && rng.gen_bool(0.25) {
            continue;
        }
        let u = rng.gen_range(0..v);
        arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
    }
    let weights: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=w_max)).collect();
    WeightedOrientedGraph::from_arcs(n, &arcs, &weights)
        .expect("tree edges are valid")
        .normalize_sources()
}

/// [`random_forest_on`] with `n` uniform in `2..=n_max`, from a fresh
/// generator seeded with `seed`.
pub fn random_weighted_oriented_forest(
    n_max: usize,
    w_max: u32,
    seed: u64,
) -> Result<WeightedOrientedGraph> {
    if !(2..=crate::monomial::MAX_VARS).contains(&n_max) || w_max == 0 {
        return Err(Error::Precondition(format!(
            "need 2 <= n_max <= 64 and w_max >= 1, got n_max={n_max}, w_max={w_max}"
        )));
    }
    let mut r = rng(seed);
    let n = r.gen_range(2..=n_max);
    Ok(random_forest_on(&mut r, n, w_max))
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n).expect("n within limits");
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b).expect("fresh edge");
            }
        }
    }
    g
}

/// Random orientation of `g` with weights in `1..=w_max`, normalized.
pub fn random_orientation(rng: &mut impl Rng, g: &SimpleGraph, w_max: u32) -> WeightedOrientedGraph {
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    let weights: Vec<u32> = (0..g.n()).map(|_| rng.gen_range(1..=w_max)).collect();
    WeightedOrientedGraph::from_arcs(g.n(), &arcs, &weights)
        .expect("edges of a simple graph")
        .normalize_sources()
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn check_enumeration_size(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::ResourceCap {
            what: "vertex count for exhaustive enumeration",
            found: n,
            cap: MAX_ENUMERATION_VERTICES,
            hint: "use the randomized runs for larger graphs",
        });
    }
    Ok(())
}

/// Every simple graph on the labeled vertex set `0..n` with at least one
/// edge.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = SimpleGraph>> {
    check_enumeration_size(n)?;
    let ps = pairs(n);
    Ok((1u64..1 << ps.len()).map(move |mask| {
        let edges: Vec<_> = ps
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        SimpleGraph::from_edges(n, &edges).expect("distinct pairs")
    }))
}

/// Every labeled forest on the vertex set `0..n`, the edgeless one first.
pub fn all_forests(n: usize) -> Result<Vec<SimpleGraph>> {
    check_enumeration_size(n)?;
    let ps = pairs(n);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn root(parent: &[usize], mut v: usize) -> usize {
        while parent[v] != v {
            v = parent[v];
        }
        v
    }
    fn rec(
        n: usize,
        ps: &[(usize, usize)],
        from: usize,
        parent: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<SimpleGraph>,
    ) {
        out.push(SimpleGraph::from_edges(n, chosen).expect("forest edges"));
        for k in from..ps.len() {
            let (a, b) = ps[k];
            let (ra, rb) = (root(parent, a), root(parent, b));
            if ra == rb {
                continue;
            }
            parent[ra] = rb;
            chosen.push((a, b));
            rec(n, ps, k + 1, parent, chosen, out);
            chosen.pop();
            parent[ra] = ra;
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    rec(n, &ps, 0, &mut parent, &mut chosen, &mut out);
    Ok(out)
}

/// Every orientation of `g` with every weight assignment in `1..=w_max`
/// on arc heads; sources keep weight 1.
pub fn weighted_orientations(
    g: &SimpleGraph,
    w_max: u32,
) -> impl Iterator<Item = WeightedOrientedGraph> + '_ {
    let edges = g.edges();
    let n = g.n();
    (0u64..1 << edges.len()).flat_map(move |orient| {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| if orient >> k & 1 == 1 { (b, a) } else { (a, b) })
            .collect();
        let heads: Vec<usize> = arcs
            .iter()
            .map(|&(_, h)| h)
            .collect::<VertexSet>()
            .iter()
            .collect();
        let total = (w_max as u64).pow(heads.len() as u32);
        (0..total).map(move |mut code| {
            let mut weights = vec![1u32; n];
            for &h in &heads {
                weights[h] = 1 + (code % w_max as u64) as u32;
                code /= w_max as u64;
            }
            WeightedOrientedGraph::from_arcs(n, &arcs, &weights).expect("forest arcs")
        })
    })
}

/// All labeled weighted oriented forests on the vertex set `0..n_max`
/// (forests with isolated vertices included), every orientation, and every
/// weight in `1..=w_max` on non-sources. No isomorphism reduction.
pub fn enumerate_forests(
    n_max: usize,
    w_max: u32,
) -> Result<impl Iterator<Item = WeightedOrientedGraph>> {
    if w_max == 0 {
        return Err(Error::Precondition("w_max must be at least 1".into()));
    }
    let forests = all_forests(n_max)?;
    Ok(forests.into_iter().flat_map(move |g| {
        weighted_orientations(&g, w_max).collect::<Vec<_>>()
    }))
}

// ---------------------------------------------------------------------------
// Isomorphism

/// Isomorphism of weighted oriented graphs on their present vertices,
/// preserving arcs and weights. Backtracking; meant for small fixtures.
pub fn are_isomorphic(d1: &WeightedOrientedGraph, d2: &WeightedOrientedGraph) -> bool {
    let v1: Vec<usize> = d1.vertices().iter().collect();
    let v2: Vec<usize> = d2.vertices().iter().collect();
    if v1.len() != v2.len() || d1.arcs().len() != d2.arcs().len() {
        return false;
    }
    let signature = |d: &WeightedOrientedGraph, v: usize| {
        let out = d.arcs().iter().filter(|&&(t, _)| t == v).count();
        let inn = d.arcs().iter().filter(|&&(_, h)| h == v).count();
        (d.weight(v), out, inn)
    };
    let mut sig1: Vec<_> = v1.iter().map(|&v| signature(d1, v)).collect();
    let mut sig2: Vec<_> = v2.iter().map(|&v| signature(d2, v)).collect();
    let (s1, s2) = (sig1.clone(), sig2.clone());
    sig1.sort_unstable();
    sig2.sort_unstable();
    if sig1 != sig2 {
        return false;
    }
    let arc = |d: &WeightedOrientedGraph, a: usize, b: usize| d.arc_between(a, b) == Some((a, b));
    let mut map = vec![usize::MAX; d1.n()];
    let mut used = vec![false; d2.n()];
    fn rec(
        k: usize,
        v1: &[usize],
        v2: &[usize],
        s1: &[(u32, usize, usize)],
        s2: &[(u32, usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
        consistent: &dyn Fn(&[usize], usize, usize) -> bool,
    ) -> bool {
        if k == v1.len() {
            return true;
        }
        let x = v1[k];
        for (j, &y) in v2.iter().enumerate() {
            if used[y] || s1[k] != s2[j] || !consistent(map, x, y) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if rec(k + 1, v1, v2, s1, s2, map, used, consistent) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }
    let consistent = |map: &[usize], x: usize, y: usize| {
        v1.iter().all(|&p| {
            let q = map[p];
            q == usize::MAX || (arc(d1, x, p) == arc(d2, y, q) && arc(d1, p, x) == arc(d2, q, y))
        })
    };
    rec(0, &v1, &v2, &s1, &s2, &mut map, &mut used, &consistent)
}

// ---------------------------------------------------------------------------
// Recursive construction

/// Vertices covered by every maximum matching.
fn essential_vertices(g: &SimpleGraph) -> Vec<usize> {
    let nu = g.matching_number();
    g.vertices()
        .iter()
        .filter(|&v| g.degree(v) > 0)
        .filter(|&v| {
            g.delete(VertexSet::singleton(v))
                .expect("vertex of g")
                .matching_number()
                < nu
        })
        .collect()
}

/// Builds a graph from `d` plus `extra` fresh vertices and extra arcs and
/// weights for them (indices `>= d.n()` refer to the fresh vertices).
fn extend(
    d: &WeightedOrientedGraph,
    extra: usize,
    arcs: &[(usize, usize)],
    weights: &[(usize, u32)],
) -> Option<WeightedOrientedGraph> {
    let n = d.n() + extra;
    if n > crate::monomial::MAX_VARS {
        return None;
    }
    let mut all_arcs: Vec<(usize, usize)> = d.arcs().to_vec();
    all_arcs.extend_from_slice(arcs);
    let mut w = d.weights().to_vec();
    w.resize(n, 1);
    for &(v, x) in weights {
        w[v] = x;
    }
    WeightedOrientedGraph::from_arcs(n, &all_arcs, &w).ok()
}

/// In-star with `leaves` leaves pointing at a centre of weight `w`, at
/// offset `base`: leaves `base..base+leaves`, centre `base+leaves`.
fn in_star_arcs(base: usize, leaves: usize) -> Vec<(usize, usize)> {
    (0..leaves).map(|i| (base + i, base + leaves)).collect()
}

fn seeds() -> Vec<WeightedOrientedGraph> {
    let mut out = Vec::new();
    for (leaves, w) in [(2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (1, 3), (3, 3), (1, 1)] {
        out.push(
            extend(
                &WeightedOrientedGraph::from_arcs(0, &[], &[]).expect("empty"),
                leaves + 1,
                &in_star_arcs(0, leaves),
                &[(leaves, w)],
            )
            .expect("star"),
        );
    }
    // unweighted star with one arc leaving the centre
    out.push(WeightedOrientedGraph::from_arcs(4, &[(0, 3), (1, 3), (3, 2)], &[1, 1, 1, 1]).expect("star"));
    out
}

/// Candidate forests with matching number one more than `d`, obtained by
/// undoing one step of the recursive classification. Assumes the last
/// power of `d` is polymatroidal.
fn grow(d: &WeightedOrientedGraph) -> Vec<WeightedOrientedGraph> {
    let g = d.underlying();
    let n = d.n();
    let essential = essential_vertices(g);
    let mut out = Vec::new();
    let (b, a, a2) = (n, n + 1, n + 2);
    // strong pendant edge {a, b} hanging off c through {b, c}
    for &c in &essential {
        for leaf_in in [true, false] {
            for w in [2, 1] {
                for c_to_b in [true, false] {
                    let ab = if leaf_in { (a, b) } else { (b, a) };
                    let bc = if c_to_b { (c, b) } else { (b, c) };
                    let weighted = if leaf_in { b } else { a };
                    out.extend(extend(d, 2, &[ab, bc], &[(weighted, w)]));
                }
            }
        }
    }
    for c in g.vertices().iter() {
        if essential.contains(&c) {
            // two leaves on b, no strong edge, common exponent on b
            for (leaf_in, w) in [(true, 2), (true, 1), (false, 1)] {
                for c_to_b in [true, false] {
                    let (e1, e2) = if leaf_in {
                        ((a, b), (a2, b))
                    } else {
                        ((b, a), (b, a2))
                    };
                    let bc = if c_to_b { (c, b) } else { (b, c) };
                    out.extend(extend(d, 3, &[e1, e2, bc], &[(b, w)]));
                }
            }
        } else if d.weight(c) == 1 && g.degree(c) > 0 {
            let without_c = d
                .delete(VertexSet::singleton(c))
                .expect("vertex of d")
                .normalize_sources();
            if !classify_last_power(&without_c).is_ok_and(|cert| cert.verdict) {
                continue;
            }
            // x_{b,c} = x_c x_b^{w(b)} and every leaf edge carries x_b^{w(b)}
            for t in [1, 2] {
                let leaves: &[usize] = if t == 1 { &[a] } else { &[a, a2] };
                for (leaf_in, w, c_to_b) in
                    [(true, 2, true), (true, 1, true), (true, 1, false), (false, 1, true), (false, 1, false)]
                {
                    let mut arcs: Vec<_> = leaves
                        .iter()
                        .map(|&l| if leaf_in { (l, b) } else { (b, l) })
                        .collect();
                    arcs.push(if c_to_b { (c, b) } else { (b, c) });
                    out.extend(extend(d, 1 + t, &arcs, &[(b, w)]));
                }
            }
        }
    }
    // disjoint isolated edge, then a disjoint weighted in-star
    for w in [2, 1] {
        out.extend(extend(d, 2, &[(n, n + 1)], &[(n + 1, w)]));
    }
    out.extend(extend(d, 3, &in_star_arcs(n, 2), &[(n + 2, 2)]));
    out
}

/// Outcome of [`construct_linear_forests_with_stats`].
#[derive(Clone, Debug, Default)]
pub struct Construction {
    pub forests: Vec<WeightedOrientedGraph>,
    /// Candidates produced by the moves that the classifier rejected.
    pub rejected: usize,
}

/// Forests with matching number `target_nu` whose last matching power is
/// polymatroidal, built from weighted stars by inverse classification
/// steps. At most `budget` graphs are returned.
pub fn construct_linear_forests(target_nu: usize, budget: usize) -> Result<Vec<WeightedOrientedGraph>> {
    Ok(construct_linear_forests_with_stats(target_nu, budget)?.forests)
}

pub fn construct_linear_forests_with_stats(target_nu: usize, budget: usize) -> Result<Construction> {
    if target_nu == 0 {
        return Err(Error::Precondition("target_nu must be at least 1".into()));
    }
    let mut rejected = 0;
    let accept = |d: &WeightedOrientedGraph, nu: usize, rejected: &mut usize| {
        let ok = d.matching_number() == nu
            && classify_last_power(d).is_ok_and(|c| c.verdict);
        if !ok {
            *rejected += 1;
        }
        ok
    };
    let width = budget.max(24);
    let mut level: Vec<WeightedOrientedGraph> = seeds()
        .into_iter()
        .filter(|d| accept(d, 1, &mut rejected))
        .collect();
    for nu in 2..=target_nu {
        let cap = if nu == target_nu { budget } else { width };
        let children: Vec<Vec<WeightedOrientedGraph>> = level.par_iter().map(grow).collect();
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        let longest = children.iter().map(Vec::len).max().unwrap_or(0);
        'fill: for i in 0..longest {
            for kids in &children {
                if next.len() >= cap {
                    break 'fill;
                }
                let Some(kid) = kids.get(i) else { continue };
                if seen.contains(kid) || !accept(kid, nu, &mut rejected) {
                    continue;
                }
                seen.insert(kid.clone());
                next.push(kid.clone());
            }
        }
        level = next;
    }
    level.truncate(budget);
    Ok(Construction {
        forests: level,
        rejected,
    })
}

// ---------------------------------------------------------------------------
// Cross-validation

/// Generator and pair caps for the two oracles.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct OracleCaps {
    pub betti_generators: usize,
    pub exchange_pairs: usize,
    pub field: Field,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            betti_generators: DEFAULT_GENERATOR_CAP,
            exchange_pairs: 4000,
            field: Field::Gf2,
        }
    }
}

/// `None` marks an oracle skipped because its cap was exceeded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub linearly_related: Option<bool>,
    pub polymatroidal: Option<bool>,
    pub linear_resolution: Option<bool>,
    pub classifier: bool,
}

impl Verdicts {
    fn agree(&self) -> bool {
        [self.linearly_related, self.polymatroidal, self.linear_resolution]
            .iter()
            .flatten()
            .all(|&v| v == self.classifier)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub classify_us: u64,
    pub power_us: u64,
    pub exchange_us: u64,
    pub betti_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub graph: GraphDocument,
    pub nu: usize,
    pub generators: usize,
    pub verdicts: Verdicts,
    pub timings: Timings,
    pub skipped_oracle: bool,
    pub agreement: bool,
}

fn micros(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

/// Runs the classifier and both oracles on the last matching power of `d`.
pub fn cross_validate(d: &WeightedOrientedGraph) -> Result<TrialReport> {
    cross_validate_with(d, OracleCaps::default())
}

pub fn cross_validate_with(d: &WeightedOrientedGraph, caps: OracleCaps) -> Result<TrialReport> {
    let nu = d.matching_number();
    if nu == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let mut timings = Timings::default();
    let t = Instant::now();
    let cert = classify_last_power(d)?;
    timings.classify_us = micros(t);

    let t = Instant::now();
    let power = matching_power(&edge_ideal(d), nu)?;
    timings.power_us = micros(t);

    let t = Instant::now();
    let polymatroidal = (power.len() * power.len() <= caps.exchange_pairs).then(|| is_polymatroidal(&power));
    timings.exchange_us = micros(t);

    let t = Instant::now();
    let (linearly_related, linear_resolution) = if power.len() <= caps.betti_generators {
        (
            Some(is_linearly_related_with_cap(&power, caps.betti_generators)?),
            Some(has_linear_resolution_with_cap(&power, caps.field, caps.betti_generators)?),
        )
    } else {
        (None, None)
    };
    timings.betti_us = micros(t);

    let verdicts = Verdicts {
        linearly_related,
        polymatroidal,
        linear_resolution,
        classifier: cert.verdict,
    };
    Ok(TrialReport {
        index: 0,
        seed: None,
        graph: GraphDocument::from_graph(d),
        nu,
        generators: power.len(),
        skipped_oracle: polymatroidal.is_none() || linear_resolution.is_none(),
        agreement: verdicts.agree(),
        verdicts,
        timings,
    })
}

/// Generators of `ideal` agree on the exponent of every variable that
/// appears with exponent above 1 somewhere.
pub fn constant_high_degrees(ideal: &MonomialIdeal) -> bool {
    (0..ideal.n()).all(|x| {
        let mut exps = ideal.generators().iter().map(|g| g.exponent(x));
        match exps.clone().find(|&e| e > 1) {
            Some(r) => exps.all(|e| e == r),
            None => true,
        }
    })
}

// ---------------------------------------------------------------------------
// Unweighted last powers

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCheckSummary {
    pub graphs: u64,
    pub passed: u64,
    /// Edge lists of (up to 20) failing graphs.
    pub failures: Vec<Vec<(usize, usize)>>,
}

impl GraphCheckSummary {
    fn record(&mut self, g: &SimpleGraph, ok: bool) {
        self.graphs += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < KEPT_FAILURES {
            self.failures.push(g.edges());
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.graphs += other.graphs;
        self.passed += other.passed;
        self.failures.extend(other.failures);
        self.failures.truncate(KEPT_FAILURES);
        self
    }

    pub fn all_passed(&self) -> bool {
        self.graphs == self.passed
    }
}

/// `I(G)^[ν(G)]` is polymatroidal.
pub fn unweighted_last_power_is_polymatroidal(g: &SimpleGraph) -> bool {
    let d = WeightedOrientedGraph::from_simple(g);
    let power = matching_power(&edge_ideal(&d), g.matching_number()).expect("n <= 64");
    is_polymatroidal(&power)
}

/// Checks every graph with at least one edge on `0..n`.
pub fn verify_unweighted_exhaustive(n: usize) -> Result<GraphCheckSummary> {
    let graphs: Vec<SimpleGraph> = all_graphs(n)?.collect();
    Ok(graphs
        .par_chunks(4096)
        .map(|chunk| {
            let mut s = GraphCheckSummary::default();
            for g in chunk {
                s.record(g, unweighted_last_power_is_polymatroidal(g));
            }
            s
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(GraphCheckSummary::default(), GraphCheckSummary::merge))
}

/// Random graphs for the unweighted check: `n` uniform in `2..=n_max`,
/// edge probability alternating between 0.2 and 0.4, edgeless draws
/// replaced.
pub fn random_unweighted_graphs(trials: usize, n_max: usize, seed: u64) -> Result<Vec<SimpleGraph>> {
    if !(2..=crate::monomial::MAX_VARS).contains(&n_max) {
        return Err(Error::Precondition(format!("need 2 <= max-n <= 64, got {n_max}")));
    }
    let mut r = rng(seed);
    Ok((0..trials)
        .map(|i| {
            let p = if i % 2 == 0 { 0.2 } else { 0.4 };
            loop {
                let n = r.gen_range(2..=n_max);
                let g = random_graph(&mut r, n, p);
                if g.edge_count() > 0 {
                    break g;
                }
            }
        })
        .collect())
}

pub fn verify_unweighted_random(trials: usize, n_max: usize, seed: u64) -> Result<GraphCheckSummary> {
    let graphs = random_unweighted_graphs(trials, n_max, seed)?;
    let verdicts: Vec<bool> = graphs.par_iter().map(unweighted_last_power_is_polymatroidal).collect();
    let mut s = GraphCheckSummary::default();
    for (g, ok) in graphs.iter().zip(verdicts) {
        s.record(g, ok);
    }
    Ok(s)
}

// ---------------------------------------------------------------------------
// The forest corpus

/// Counters for the exhaustive forest corpus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub enumerated: u64,
    /// Instances with `ν >= 2` and `I(D) != I(G)`.
    pub considered: u64,
    pub agreements: u64,
    pub disagreements: u64,
    pub classifier_true: u64,
    /// Instances where the Betti oracle was over its cap; they were decided
    /// by the exchange oracle alone.
    pub oracle_skipped: u64,
    /// Equigenerated powers where the two fields disagreed on linearity.
    /// Logged, not counted as a failure.
    pub field_mismatches: u64,
    pub replay_failures: u64,
    /// Powers `I(D)^[k]`, `1 <= k < ν`, checked for linear relatedness.
    pub lower_powers: u64,
    pub lower_powers_skipped: u64,
    pub lower_powers_linearly_related: u64,
    /// Linearly related powers checked for constant high degrees.
    pub linearly_related_powers: u64,
    pub constant_degree_violations: u64,
    /// Distant configurations with `t = 1` compared against the direct
    /// strong-edge test.
    pub strong_edge_checks: u64,
    pub strong_edge_mismatches: u64,
    /// Up to 20 instances that broke any property.
    pub failures: Vec<GraphDocument>,
}

impl CorpusSummary {
    fn merge(mut self, o: Self) -> Self {
        self.enumerated += o.enumerated;
        self.considered += o.considered;
        self.agreements += o.agreements;
        self.disagreements += o.disagreements;
        self.classifier_true += o.classifier_true;
        self.oracle_skipped += o.oracle_skipped;
        self.field_mismatches += o.field_mismatches;
        self.replay_failures += o.replay_failures;
        self.lower_powers += o.lower_powers;
        self.lower_powers_skipped += o.lower_powers_skipped;
        self.lower_powers_linearly_related += o.lower_powers_linearly_related;
        self.linearly_related_powers += o.linearly_related_powers;
        self.constant_degree_violations += o.constant_degree_violations;
        self.strong_edge_checks += o.strong_edge_checks;
        self.strong_edge_mismatches += o.strong_edge_mismatches;
        self.failures.extend(o.failures);
        self.failures.truncate(KEPT_FAILURES);
        self
    }

    fn fail(&mut self, d: &WeightedOrientedGraph) {
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(GraphDocument::from_graph(d));
        }
    }

    /// Share of considered instances whose Betti oracle was skipped.
    pub fn skipped_fraction(&self) -> f64 {
        if self.considered == 0 {
            0.0
        } else {
            self.oracle_skipped as f64 / self.considered as f64
        }
    }
}

/// Which of the optional corpus checks to run.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CorpusOptions {
    pub caps: OracleCaps,
    /// Replay every certificate.
    pub replay: bool,
    /// Recompute linear resolutions over the rationals as well.
    pub both_fields: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            caps: OracleCaps::default(),
            replay: true,
            both_fields: true,
        }
    }
}

fn corpus_instance(d: &WeightedOrientedGraph, nu: usize, opts: CorpusOptions, s: &mut CorpusSummary) {
    let caps = opts.caps;
    s.considered += 1;
    let mut broken = false;
    let cert = classify_last_power(d).expect("normalized forest");
    if cert.verdict {
        s.classifier_true += 1;
    }
    if opts.replay && !verify_certificate(d, &cert).unwrap_or(false) {
        s.replay_failures += 1;
        broken = true;
    }
    let ideal = edge_ideal(d);
    let power = matching_power(&ideal, nu).expect("n <= 64");
    let poly = is_polymatroidal(&power);
    let mut agree = poly == cert.verdict;
    if power.len() <= caps.betti_generators {
        let related = is_linearly_related_with_cap(&power, caps.betti_generators).expect("within cap");
        let linear =
            has_linear_resolution_with_cap(&power, caps.field, caps.betti_generators).expect("within cap");
        agree &= related == cert.verdict && linear == cert.verdict;
        if opts.both_fields && power.equigenerated_degree().ok().flatten().is_some() {
            let other = match caps.field {
                Field::Gf2 => Field::Rationals,
                Field::Rationals => Field::Gf2,
            };
            if has_linear_resolution_with_cap(&power, other, caps.betti_generators).expect("within cap") != linear {
                s.field_mismatches += 1;
            }
        }
        if related {
            s.linearly_related_powers += 1;
            if !constant_high_degrees(&power) {
                s.constant_degree_violations += 1;
                broken = true;
            }
        }
    } else {
        s.oracle_skipped += 1;
    }
    if agree {
        s.agreements += 1;
    } else {
        s.disagreements += 1;
        broken = true;
    }
    for k in 1..nu {
        let lower = matching_power(&ideal, k).expect("n <= 64");
        s.lower_powers += 1;
        if lower.len() > caps.betti_generators {
            s.lower_powers_skipped += 1;
            continue;
        }
        if is_linearly_related_with_cap(&lower, caps.betti_generators).expect("within cap") {
            s.lower_powers_linearly_related += 1;
            s.linearly_related_powers += 1;
            broken = true;
            if !constant_high_degrees(&lower) {
                s.constant_degree_violations += 1;
            }
        }
    }
    if broken {
        s.fail(d);
    }
}

fn strong_edge_checks(g: &SimpleGraph, s: &mut CorpusSummary) {
    for cfg in g.all_distant_configurations() {
        if cfg.t() != 1 {
            continue;
        }
        s.strong_edge_checks += 1;
        let criterion = strong_edge_criterion(g, &cfg).expect("distant configuration with ν >= 2");
        if criterion != g.is_strong_edge(cfg.leaves[0], cfg.b).expect("edge") {
            s.strong_edge_mismatches += 1;
        }
    }
}

fn corpus_forest(g: &SimpleGraph, w_max: u32, opts: CorpusOptions) -> CorpusSummary {
    let mut s = CorpusSummary::default();
    let nu = g.matching_number();
    if nu >= 2 {
        strong_edge_checks(g, &mut s);
    }
    for d in weighted_orientations(g, w_max) {
        s.enumerated += 1;
        if nu >= 2 && !d.has_trivial_weights() {
            corpus_instance(&d, nu, opts, &mut s);
        }
    }
    s
}

/// Runs every forest check over all weighted oriented forests on
/// `0..n_max` with weights up to `w_max`.
pub fn verify_forest_corpus(n_max: usize, w_max: u32, opts: CorpusOptions) -> Result<CorpusSummary> {
    if w_max == 0 {
        return Err(Error::Precondition("w_max must be at least 1".into()));
    }
    let forests = all_forests(n_max)?;
    Ok(forests
        .par_iter()
        .map(|g| corpus_forest(g, w_max, opts))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(CorpusSummary::default(), CorpusSummary::merge))
}

/// Random forests with `ν >= 2` and `I(D) != I(G)`, with the seed that
/// produced each one.
pub fn random_classifier_instances(
    trials: usize,
    n_max: usize,
    w_max: u32,
    seed: u64,
) -> Result<Vec<(u64, WeightedOrientedGraph)>> {
    if n_max < 4 {
        return Err(Error::Precondition(format!(
            "need max-n >= 4 for matching number 2, got {n_max}"
        )));
    }
    if w_max < 2 {
        return Err(Error::Precondition("need max-weight >= 2 for weighted instances".into()));
    }
    let mut master = rng(seed);
    let mut out = Vec::with_capacity(trials);
    while out.len() < trials {
        let s: u64 = master.gen();
        let d = random_weighted_oriented_forest(n_max, w_max, s)?;
        if d.matching_number() >= 2 && !d.has_trivial_weights() {
            out.push((s, d));
        }
    }
    Ok(out)
}

/// Cross-validates random instances; reports come back in trial order.
pub fn verify_classifier_random(
    trials: usize,
    n_max: usize,
    w_max: u32,
    seed: u64,
    caps: OracleCaps,
) -> Result<Vec<TrialReport>> {
    let instances = random_classifier_instances(trials, n_max, w_max, seed)?;
    instances
        .par_iter()
        .enumerate()
        .map(|(index, (s, d))| {
            let mut r = cross_validate_with(d, caps)?;
            r.index = index;
            r.seed = Some(*s);
            Ok(r)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Induced subgraphs

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedPairReport {
    pub index: usize,
    pub graph: GraphDocument,
    pub kept: Vec<usize>,
    pub k: usize,
    pub betti_monotone: bool,
    pub regularity: (i64, i64),
    pub holds: bool,
}

/// Random pairs `(D, D')` with `D'` induced, `1 <= k <= ν(D')`, and both
/// `k`-th matching powers within the Betti cap. Compares the multigraded
/// Betti numbers entrywise and the regularities.
pub fn verify_induced_pairs(pairs: usize, seed: u64, field: Field) -> Result<Vec<InducedPairReport>> {
    let mut r = rng(seed);
    let mut work = Vec::with_capacity(pairs);
    while work.len() < pairs {
        let n = r.gen_range(3..=7);
        let g = random_graph(&mut r, n, 0.4);
        if g.edge_count() == 0 {
            continue;
        }
        let d = random_orientation(&mut r, &g, 3);
        let kept: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.7)).collect();
        let sub = d.induced_subgraph(kept.iter().copied().collect())?;
        let nu_sub = sub.matching_number();
        if nu_sub == 0 {
            continue;
        }
        let k = r.gen_range(1..=nu_sub);
        let big = matching_power(&edge_ideal(&d), k)?;
        let small = matching_power(&edge_ideal(&sub), k)?;
        if big.len() > DEFAULT_GENERATOR_CAP || small.len() > DEFAULT_GENERATOR_CAP {
            continue;
        }
        work.push((d, kept, k, big, small));
    }
    work.into_par_iter()
        .enumerate()
        .map(|(index, (d, kept, k, big, small))| {
            let tb = betti_numbers_with_cap(&big, field, DEFAULT_GENERATOR_CAP)?;
            let ts = betti_numbers_with_cap(&small, field, DEFAULT_GENERATOR_CAP)?;
            let betti_monotone = ts.entries().all(|(i, a, rank)| rank <= tb.get(i, a));
            let regularity = (ts.regularity(), tb.regularity());
            Ok(InducedPairReport {
                index,
                graph: GraphDocument::from_graph(&d),
                kept,
                k,
                betti_monotone,
                regularity,
                holds: betti_monotone && regularity.0 <= regularity.1,
            })
        })
        .collect()
}
