//! Certificates built on a spaced matching `M` (triangle-free graphs).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::checks::Checklist;
use super::greedy::greedy_spaced_matching;
use super::tree::{
    components, distance_violations, edges_outside, nearest_owner, weighted_average, TreeBuilder,
};
use super::Check;
use crate::bounds::{evaluate_bound, BoundId};
use crate::error::{Error, Result};
use crate::graph::{Forbidden, Graph, IdMap, UNREACHABLE};
use crate::metrics::{eccentricities, eccentricity_profile, path_average_eccentricity, EdgeWeighting, VertexWeighting};
use crate::rational::{ceil_to_u64, int, ratio, Rational};

/// Recorded state of the matching argument on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCertificate {
    /// A maximum-degree vertex.
    pub anchor: usize,
    /// `e1`: the edge from the anchor to its lowest-indexed neighbour.
    pub anchor_edge: (usize, usize),
    /// `M` in insertion order.
    pub matching: Vec<(usize, usize)>,
    pub paths: Vec<Vec<usize>>,
    pub connectors: Vec<(usize, usize)>,
    pub tree_edges: Vec<(usize, usize)>,
    /// Edges at `V(M)` left out of the initial forest to keep it acyclic.
    pub pruned_edges: Vec<(usize, usize)>,
    /// `c` on the vertices of `T`.
    pub vertex_weights: VertexWeighting,
    /// `c̄` on the vertices of `L(T)`, nonzero only on `M`.
    pub edge_weights: EdgeWeighting,
    /// `c̄'` on `M`, indexed like `contracted`.
    pub scaled_edge_weights: Vec<Rational>,
    /// `L(T)`; vertex `i` is `line_edges[i]`.
    pub line_graph: Graph,
    pub line_edges: Vec<(usize, usize)>,
    /// `L(T)^4[M]`, with ids mapped to `line_graph` vertices.
    pub contracted: Graph,
    pub contracted_map: IdMap,
    pub checks: Vec<Check>,
}

fn r(x: usize) -> Rational {
    int(x as u64)
}

pub(crate) fn certify_matching(g: &Graph) -> Result<MatchingCertificate> {
    let n = g.n();
    if n < 2 {
        return Err(Error::ParameterOutOfRange("certificates need n >= 2".into()));
    }
    let summary = g.degree_summary()?;
    if !summary.connected {
        return Err(Error::NotConnected);
    }
    if let Some(w) = g.find_forbidden(Forbidden::Triangle) {
        return Err(Error::NotTriangleFree(w));
    }
    let (delta, max_delta) = (summary.min_degree, summary.max_degree);
    let anchor = g.max_degree_vertex().expect("n >= 2");
    let partner = g.neighbors(anchor)[0];
    let anchor_edge = (anchor.min(partner), anchor.max(partner));
    let matching = greedy_spaced_matching(g, anchor_edge)?;
    let matched = matching.vertices();
    let base_dist = g.multi_source_distances(&matched);

    let mut builder = TreeBuilder::new(n);
    let mut used = Vec::new();
    for &(u, v) in &matching.edges {
        builder.add_edge(u, v);
        used.push((u, v));
    }
    for x in (0..n).filter(|&x| base_dist[x] == 1) {
        let root = *g
            .neighbors(x)
            .iter()
            .find(|&&w| base_dist[w] == 0)
            .expect("layer 1 touches V(M)");
        builder.add_edge(root, x);
        used.push((root.min(x), root.max(x)));
    }
    used.sort_unstable();
    let pruned_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| base_dist[u] == 0 || base_dist[v] == 0)
        .filter(|e| used.binary_search(e).is_err())
        .collect();
    let connectors: Vec<(usize, usize)> = matching
        .paths
        .iter()
        .map(|p| (p[1].min(p[2]), p[1].max(p[2])))
        .collect();
    for &(u, v) in &connectors {
        builder.add_edge(u, v);
    }
    builder.complete(g, &base_dist);
    let (tree, tree_edges) = builder.finish();

    let (owner_dist, owner) = nearest_owner(&tree, &matched);
    let mut counts = vec![0u64; n];
    for &o in owner.iter().filter(|&&o| o != UNREACHABLE) {
        counts[o] += 1;
    }
    let (line_graph, line_edges) = tree.line_graph();
    let line_id = |e: &(usize, usize)| line_edges.binary_search(e).ok();
    let mut bar = BTreeMap::new();
    let mut missing_from_tree = 0;
    for e in &matching.edges {
        match line_id(e) {
            Some(id) => {
                bar.insert(id, int(counts[e.0] + counts[e.1]));
            }
            None => missing_from_tree += 1,
        }
    }
    let edge_weights = EdgeWeighting::new(bar).expect("counts are nonnegative");
    let m_ids: Vec<usize> = edge_weights.entries().keys().copied().collect();
    let (contracted, contracted_map) = line_graph.power(4)?.induced_subgraph(&m_ids)?;
    let e1_id = line_id(&anchor_edge);
    let two_delta = r(2 * delta);
    let shift = r(max_delta) - r(delta);
    let scaled_edge_weights: Vec<Rational> = contracted_map
        .new_to_old
        .iter()
        .map(|&id| {
            let w = edge_weights.weight(id);
            if Some(id) == e1_id {
                (w - &shift) / &two_delta
            } else {
                w / &two_delta
            }
        })
        .collect();

    let mut cert = MatchingCertificate {
        anchor,
        anchor_edge,
        matching: matching.edges,
        paths: matching.paths,
        connectors,
        tree_edges,
        pruned_edges,
        vertex_weights: VertexWeighting::from_counts(&counts),
        edge_weights,
        scaled_edge_weights,
        line_graph,
        line_edges,
        contracted,
        contracted_map,
        checks: Vec::new(),
    };
    cert.checks = checklist(g, &tree, &cert, &owner_dist, missing_from_tree, delta, max_delta)?;
    Ok(cert)
}

fn checklist(
    g: &Graph,
    tree: &Graph,
    cert: &MatchingCertificate,
    owner_dist: &[usize],
    missing_from_tree: usize,
    delta: usize,
    max_delta: usize,
) -> Result<Vec<Check>> {
    let n_us = g.n();
    let (n, d, dm) = (r(n_us), r(delta), r(max_delta));
    let one = Rational::one();
    let matched = {
        let mut vs: Vec<usize> = cert.matching.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    };
    let pg = eccentricity_profile(g)?;
    let pt = eccentricity_profile(tree).map_err(|_| Error::ConstructionFailed {
        trace: "spanning tree assembly left the tree disconnected".into(),
    })?;
    let counts: Vec<Rational> = cert.vertex_weights.weights().to_vec();
    let avec_c_t = weighted_average(&pt.ecc, &counts);
    let ecc_l = eccentricities(&cert.line_graph)?;
    let bar_dense = cert.edge_weights.to_vertex_weighting(cert.line_graph.n());
    let avec_bar_l = weighted_average(&ecc_l, bar_dense.weights());

    let mut list = Checklist::default();
    list.check("G is triangle-free").eq(
        "triangles found",
        r(usize::from(!g.is_triangle_free())),
        r(0),
    );

    let check = list.check("M is maximal under the distance rule, e1 incident with a Delta-vertex");
    let (a, b) = cert.anchor_edge;
    check
        .eq("deg_G(v1)", r(g.degree(cert.anchor)), dm.clone())
        .eq("e1 incident with v1", r(usize::from(a == cert.anchor || b == cert.anchor)), r(1))
        .eq("|V(M)|", r(matched.len()), r(2 * cert.matching.len()));
    let min_gap = cert
        .matching
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| {
            let dist = g.multi_source_distances(&[u, v]);
            cert.matching[i + 1..]
                .iter()
                .map(|&(x, y)| dist[x].min(dist[y]))
                .collect::<Vec<_>>()
        })
        .min();
    if let Some(gap) = min_gap {
        check.ge("min distance between matching edges", r(gap), r(3));
    }
    let base = g.multi_source_distances(&matched);
    let coverage = g
        .edges()
        .iter()
        .map(|&(x, y)| base[x].min(base[y]))
        .max()
        .unwrap_or(0);
    check.le("max_e d_G(e, V(M))", r(coverage), r(2));

    list.check("T is a spanning tree, distance preserving from V(M), with deg_T(v1) = Delta")
        .eq("|E(T)|", r(tree.edge_count()), r(n_us - 1))
        .eq("components of T", r(components(tree)), r(1))
        .eq("edges of T outside G", r(edges_outside(tree, g)), r(0))
        .eq("matching edges missing from T", r(missing_from_tree), r(0))
        .eq(
            "vertices with d_T(x, V(M)) != d_G(x, V(M))",
            r(distance_violations(tree, g, &matched)),
            r(0),
        )
        .eq("deg_T(v1)", r(tree.degree(cert.anchor)), dm.clone());

    let e1_id = cert.line_edges.binary_search(&cert.anchor_edge).ok();
    let check = list.check("weights c̄(e1) >= Delta + delta, c̄(e) >= 2 delta, sum c̄ = n");
    check.ge(
        "c̄(e1)",
        e1_id.map(|id| cert.edge_weights.weight(id)).unwrap_or_else(Rational::zero),
        &dm + &d,
    );
    if let Some(min) = cert
        .edge_weights
        .entries()
        .iter()
        .filter(|(&id, _)| Some(id) != e1_id)
        .map(|(_, w)| w.clone())
        .min()
    {
        check.ge("min c̄(e), e in M - e1", min, r(2 * delta));
    }
    let outside: Rational = (0..n_us)
        .filter(|v| matched.binary_search(v).is_err())
        .map(|v| counts[v].clone())
        .sum();
    check
        .eq("c outside V(M)", outside, r(0))
        .eq("sum of c̄", cert.edge_weights.total().clone(), n.clone());

    list.check("|M| <= (n - Delta + delta)/(2 delta)").le(
        "|M|",
        r(cert.matching.len()),
        (&n - &dm + &d) / r(2 * delta),
    );

    let far = owner_dist.iter().copied().max().expect("n >= 2");
    list.check("avec(T) <= avec_c(T) + 3")
        .le("max_x d_T(x, x_M)", r(far), r(3))
        .le("avec(T)", pt.avec.clone(), &avec_c_t + r(3));

    list.check("avec_c(T) <= avec_c̄(L) + 1")
        .le("avec_c(T)", avec_c_t.clone(), &avec_bar_l + &one);

    let check = list.check("L^4[M] connected and avec_c̄(L) <= 4 avec_c̄(L^4[M]) + 3");
    check
        .eq("components of L^4[M]", r(components(&cert.contracted)), r(1))
        .eq("|V(L^4[M])|", r(cert.contracted.n()), r(cert.matching.len()));
    let ecc_contracted = (components(&cert.contracted) == 1)
        .then(|| eccentricities(&cert.contracted))
        .transpose()?;
    let avec_bar_contracted = ecc_contracted.as_ref().map(|ecc| {
        let worst = cert
            .contracted_map
            .new_to_old
            .iter()
            .zip(ecc)
            .map(|(&id, &e)| int(ecc_l[id] as u64) - int(4 * e as u64))
            .max()
            .expect("M is nonempty");
        check.le("max_e e_L(e) - 4 e_L^4[M](e)", worst, r(3));
        let w: Vec<Rational> = cert
            .contracted_map
            .new_to_old
            .iter()
            .map(|&id| cert.edge_weights.weight(id))
            .collect();
        let avec = weighted_average(ecc, &w);
        check.le("avec_c̄(L)", avec_bar_l.clone(), r(4) * &avec + r(3));
        avec
    });

    let bound = evaluate_bound(BoundId::Thm2, n_us as u64, delta as u64, max_delta as u64)?;
    let shift = &dm - &d;
    let step = ratio(3, 1) * (&n - &dm) / r(8 * delta) + (&n - &dm) * &shift / (r(8 * delta) * &n)
        - ratio(9, 1) * &shift / (r(8) * &n)
        + ratio(5, 8);
    let check = list.check("avec(G) <= THM2 bound");
    check.le("avec(G)", pg.avec.clone(), pt.avec.clone());
    match (&ecc_contracted, avec_bar_contracted) {
        (Some(ecc), Some(avec)) => {
            let scaled = &cert.scaled_edge_weights;
            let big_n = (&n - &shift) / r(2 * delta);
            let e1_pos = e1_id.and_then(|id| cert.contracted_map.new_id(id)).expect("e1 in M");
            let e_e1 = r(ecc[e1_pos]);
            let avec_scaled = weighted_average(ecc, scaled);
            let ceil_n = ceil_to_u64(&big_n).expect("N' is positive");
            let path = path_average_eccentricity(ceil_n);
            let half_ratio = (&n - &dm) / r(2 * delta);
            check
                .ge("min c̄'(e)", scaled.iter().min().expect("M is nonempty").clone(), one.clone())
                .eq("total weight of c̄'", scaled.iter().sum(), big_n.clone())
                .eq(
                    "weighted average decomposition",
                    avec.clone(),
                    (&n - &shift) / &n * &avec_scaled + &shift / &n * &e_e1,
                )
                .le("e(e1) in L^4[M]", e_e1, r(cert.matching.len() - 1))
                .le("|M| - 1", r(cert.matching.len() - 1), &half_ratio - ratio(1, 2))
                .le("avec_c̄' of L^4[M]", avec_scaled, path.clone())
                .le("avec(P_ceil(N'))", path, ratio(3, 4) * int(ceil_n) - ratio(1, 2))
                .le(
                    "(3/4)ceil(N') - 1/2",
                    ratio(3, 4) * int(ceil_n) - ratio(1, 2),
                    ratio(3, 4) * &half_ratio + ratio(5, 8),
                )
                .le("avec_c̄(L^4[M])", avec.clone(), step.clone())
                .le("avec(T)", pt.avec.clone(), r(4) * avec + r(7));
        }
        _ => {
            check.eq("L^4[M] connected", Rational::zero(), one.clone());
        }
    }
    check
        .le("4 * step + 7", r(4) * step + r(7), bound.clone())
        .le("avec(G)", pg.avec.clone(), bound);
    Ok(list.finish())
}
