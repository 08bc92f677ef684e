//! Certificates built on a spaced packing `A` (spacing 3 or 5).

use num_traits::{One, Zero};

use super::checks::{Check, Checklist};
use super::greedy::greedy_spaced_packing;
use super::tree::{
    components, distance_violations, edges_outside, min_pairwise_distance, nearest_owner,
    weighted_average, TreeBuilder,
};
use super::Theorem;
use crate::bounds::{evaluate_bound, BoundId, ExtremalEpsilons};
use crate::error::{Error, Result};
use crate::graph::{Forbidden, Graph, IdMap, UNREACHABLE};
use crate::metrics::{eccentricity_profile, path_average_eccentricity, VertexWeighting};
use crate::rational::{ceil_to_u64, int, ratio, Rational};

/// Recorded state of the packing argument on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingCertificate {
    pub theorem: Theorem,
    /// A maximum-degree vertex, the first member of the packing.
    pub anchor: usize,
    /// The packing `A` in insertion order.
    pub packing: Vec<usize>,
    pub spacing: usize,
    /// Shortest path recorded when each later member joined.
    pub paths: Vec<Vec<usize>>,
    /// The middle edge of each recorded path.
    pub connectors: Vec<(usize, usize)>,
    pub tree_edges: Vec<(usize, usize)>,
    /// `c`: each vertex's unit weight moved to its nearest member of `A` in `T`.
    pub weights: VertexWeighting,
    /// Rescaled weights on `A` (`c'` or `c''`), indexed like `contracted`.
    pub scaled_weights: Vec<Rational>,
    /// `T^spacing[A]`.
    pub contracted: Graph,
    pub contracted_map: IdMap,
    pub checks: Vec<Check>,
}

fn r(x: usize) -> Rational {
    int(x as u64)
}

/// Per-theorem constants: weight floors on the anchor and on the other members.
struct Floors {
    anchor: Rational,
    other: Rational,
}

pub(crate) fn certify_packing(g: &Graph, theorem: Theorem) -> Result<PackingCertificate> {
    let n = g.n();
    if n < 2 {
        return Err(Error::ParameterOutOfRange("certificates need n >= 2".into()));
    }
    let summary = g.degree_summary()?;
    if !summary.connected {
        return Err(Error::NotConnected);
    }
    let (delta, max_delta) = (summary.min_degree, summary.max_degree);
    let thm3 = theorem == Theorem::Thm3;
    if thm3 {
        if let Some(w) = g.find_forbidden(Forbidden::C4) {
            return Err(Error::NotC4Free(w));
        }
    }
    let spacing = if thm3 { 5 } else { 3 };
    let anchor = g.max_degree_vertex().expect("n >= 2");
    let packing = greedy_spaced_packing(g, anchor, spacing)?;
    let members = &packing.members;

    let mut builder = TreeBuilder::new(n);
    for &a in members {
        builder.insert_vertex(a);
        if thm3 {
            let d = g.bounded_distances(a, 2);
            for x in (0..n).filter(|&x| d[x] == 1) {
                builder.add_edge(a, x);
            }
            for x in (0..n).filter(|&x| d[x] == 2) {
                let w = *g.neighbors(x).iter().find(|&&w| d[w] == 1).expect("layer 1 parent");
                builder.add_edge(w, x);
            }
        } else {
            for &w in g.neighbors(a) {
                builder.add_edge(a, w);
            }
        }
    }
    let half = spacing / 2;
    let connectors: Vec<(usize, usize)> = packing
        .paths
        .iter()
        .map(|p| (p[half].min(p[half + 1]), p[half].max(p[half + 1])))
        .collect();
    for &(u, v) in &connectors {
        builder.add_edge(u, v);
    }
    let base_dist = g.multi_source_distances(members);
    builder.complete(g, &base_dist);
    let (tree, tree_edges) = builder.finish();

    let (owner_dist, owner) = nearest_owner(&tree, members);
    let mut counts = vec![0u64; n];
    for &o in owner.iter().filter(|&&o| o != UNREACHABLE) {
        counts[o] += 1;
    }
    let weights = VertexWeighting::from_counts(&counts);

    let mut sorted = members.clone();
    sorted.sort_unstable();
    let (contracted, contracted_map) = tree.power(spacing)?.induced_subgraph(&sorted)?;

    let floors = if thm3 {
        let eps = ExtremalEpsilons::new(delta as i64, max_delta as i64);
        Floors {
            anchor: int(eps.eps_max),
            other: int(eps.eps_min),
        }
    } else {
        Floors {
            anchor: r(max_delta + 1),
            other: r(delta + 1),
        }
    };
    let shift = &floors.anchor - &floors.other;
    let scaled_weights: Vec<Rational> = sorted
        .iter()
        .map(|&a| {
            let c = int(counts[a]);
            if a == anchor {
                (c - &shift) / &floors.other
            } else {
                c / &floors.other
            }
        })
        .collect();

    let ctx = Context {
        g,
        tree: &tree,
        n,
        delta,
        max_delta,
        anchor,
        members,
        sorted: &sorted,
        spacing,
        counts: &counts,
        owner_dist: &owner_dist,
        contracted: &contracted,
        contracted_map: &contracted_map,
        scaled: &scaled_weights,
        floors: &floors,
    };
    let checks = if thm3 { ctx.thm3_checks()? } else { ctx.thm1_checks()? };

    Ok(PackingCertificate {
        theorem,
        anchor,
        packing: packing.members.clone(),
        spacing,
        paths: packing.paths,
        connectors,
        tree_edges,
        weights,
        scaled_weights,
        contracted,
        contracted_map,
        checks,
    })
}

struct Context<'a> {
    g: &'a Graph,
    tree: &'a Graph,
    n: usize,
    delta: usize,
    max_delta: usize,
    anchor: usize,
    members: &'a [usize],
    sorted: &'a [usize],
    spacing: usize,
    counts: &'a [u64],
    owner_dist: &'a [usize],
    contracted: &'a Graph,
    contracted_map: &'a IdMap,
    scaled: &'a [Rational],
    floors: &'a Floors,
}

/// Aggregates shared by both checklists.
struct Derived {
    avec_g: Rational,
    avec_t: Rational,
    avec_c_t: Rational,
    ecc_t: Vec<usize>,
    /// Eccentricities in the contracted graph, when it is connected.
    ecc_contracted: Option<Vec<usize>>,
}

impl Context<'_> {
    fn derive(&self) -> Result<Derived> {
        let pg = eccentricity_profile(self.g)?;
        let pt = eccentricity_profile(self.tree).map_err(|_| Error::ConstructionFailed {
            trace: "spanning tree assembly left the tree disconnected".into(),
        })?;
        let weights: Vec<Rational> = self.counts.iter().map(|&c| int(c)).collect();
        let avec_c_t = weighted_average(&pt.ecc, &weights);
        let ecc_contracted = (components(self.contracted) == 1)
            .then(|| crate::metrics::eccentricities(self.contracted))
            .transpose()?;
        Ok(Derived {
            avec_g: pg.avec,
            avec_t: pt.avec,
            avec_c_t,
            ecc_t: pt.ecc,
            ecc_contracted,
        })
    }

    fn others(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied().filter(move |&a| a != self.anchor)
    }

    fn packing_check(&self, list: &mut Checklist, name: &str) {
        let check = list.check(name);
        check.eq("deg_G(A[0])", r(self.g.degree(self.members[0])), r(self.max_delta));
        if let Some(d) = min_pairwise_distance(self.g, self.members) {
            check.ge("min distance between members of A", r(d), r(self.spacing));
        }
        let coverage = *self.g.multi_source_distances(self.members).iter().max().expect("n >= 2");
        check.le("max_x d_G(x, A)", r(coverage), r(self.spacing - 1));
    }

    fn tree_check(&self, list: &mut Checklist, name: &str, distance_preserving: bool) {
        let check = list.check(name);
        check
            .eq("|E(T)|", r(self.tree.edge_count()), r(self.n - 1))
            .eq("components of T", r(components(self.tree)), r(1))
            .eq("edges of T outside G", r(edges_outside(self.tree, self.g)), r(0));
        if distance_preserving {
            check.eq(
                "vertices with d_T(x, A) != d_G(x, A)",
                r(distance_violations(self.tree, self.g, self.members)),
                r(0),
            );
        }
        check.eq("deg_T(v1)", r(self.tree.degree(self.anchor)), r(self.max_delta));
    }

    fn weight_check(&self, list: &mut Checklist, name: &str) {
        let check = list.check(name);
        check.ge("c(v1)", int(self.counts[self.anchor]), self.floors.anchor.clone());
        if let Some(min) = self.others().map(|a| self.counts[a]).min() {
            check.ge("min c(a), a in A - v1", int(min), self.floors.other.clone());
        }
        let outside: u64 = (0..self.n)
            .filter(|v| !self.members.contains(v))
            .map(|v| self.counts[v])
            .sum();
        check
            .eq("c outside A", int(outside), r(0))
            .eq("sum of c", int(self.counts.iter().sum::<u64>()), r(self.n));
    }

    fn transfer_check(&self, list: &mut Checklist, d: &Derived, radius: usize) {
        let name = format!("avec(T) <= avec_c(T) + {radius}");
        let check = list.check(&name);
        let far = self
            .owner_dist
            .iter()
            .copied()
            .max()
            .expect("n >= 2");
        check
            .le("max_x d_T(x, x_A)", r(far), r(radius))
            .le("avec(T)", d.avec_t.clone(), &d.avec_c_t + r(radius));
    }

    /// `(k)`: the contracted graph is connected and `avec_c(T) <= s*avec_c(T^s[A]) + (s-1)`.
    fn contraction_check(&self, list: &mut Checklist, d: &Derived) -> Option<Rational> {
        let s = self.spacing;
        let name = format!("T^{s}[A] connected and avec_c(T) <= {s} avec_c(T^{s}[A]) + {}", s - 1);
        let check = list.check(&name);
        check
            .eq(&format!("components of T^{s}[A]"), r(components(self.contracted)), r(1))
            .eq(&format!("|V(T^{s}[A])|"), r(self.contracted.n()), r(self.members.len()));
        let ecc = d.ecc_contracted.as_ref()?;
        let worst = self
            .sorted
            .iter()
            .zip(ecc)
            .map(|(&a, &e)| int(d.ecc_t[a] as u64) - int((s * e) as u64))
            .max()
            .expect("A is nonempty");
        check.le(&format!("max_a e_T(a) - {s} e_T^{s}[A](a)"), worst, r(s - 1));
        let weights: Vec<Rational> = self.sorted.iter().map(|&a| int(self.counts[a])).collect();
        let avec_c_contracted = weighted_average(ecc, &weights);
        check.le(
            "avec_c(T)",
            d.avec_c_t.clone(),
            r(s) * &avec_c_contracted + r(s - 1),
        );
        Some(avec_c_contracted)
    }

    /// Facts shared by the final step: rescaled weights and the path comparison.
    /// Returns `(N, e(v1))`.
    fn rescaling_facts(
        &self,
        check: &mut Check,
        ecc: &[usize],
        avec_c_contracted: &Rational,
        weight_name: &str,
    ) -> (Rational, Rational) {
        let n = r(self.n);
        let shift = &self.floors.anchor - &self.floors.other;
        let big_n = (&n - &shift) / &self.floors.other;
        let min_scaled = self.scaled.iter().min().expect("A is nonempty").clone();
        let total: Rational = self.scaled.iter().sum();
        let anchor_pos = self.contracted_map.new_id(self.anchor).expect("anchor in A");
        let e_v1 = r(ecc[anchor_pos]);
        let avec_scaled = weighted_average(ecc, self.scaled);
        check
            .ge(&format!("min {weight_name}(a)"), min_scaled, Rational::one())
            .eq(&format!("total weight of {weight_name}"), total, big_n.clone())
            .eq(
                "weighted average decomposition",
                avec_c_contracted.clone(),
                (&n - &shift) / &n * &avec_scaled + &shift / &n * &e_v1,
            )
            .le("e(v1) in contracted graph", e_v1.clone(), r(self.members.len() - 1));
        let ceil_n = ceil_to_u64(&big_n).expect("N is positive");
        let path = path_average_eccentricity(ceil_n);
        check
            .le(&format!("avec_{weight_name} of contracted graph"), avec_scaled, path.clone())
            .le(
                "avec(P_ceil(N))",
                path,
                ratio(3, 4) * int(ceil_n) - ratio(1, 2),
            );
        (big_n, e_v1)
    }

    fn thm1_checks(&self) -> Result<Vec<Check>> {
        let d = self.derive()?;
        let (n, delta, max_delta) = (r(self.n), r(self.delta), r(self.max_delta));
        let mut list = Checklist::default();
        list.check("anchor has maximum degree")
            .eq("deg_G(v1)", r(self.g.degree(self.anchor)), max_delta.clone());
        self.packing_check(&mut list, "A is a 2-packing with coverage radius 2");
        self.tree_check(&mut list, "T is a spanning tree with deg_T(v1) = Delta", false);
        list.check("avec(G) <= avec(T)")
            .le("avec(G)", d.avec_g.clone(), d.avec_t.clone());
        self.weight_check(&mut list, "weights c(v1) >= Delta + 1, c(a) >= delta + 1, sum c = n");
        list.check("|A| <= (n - Delta + delta)/(delta + 1)").le(
            "|A|",
            r(self.members.len()),
            (&n - &max_delta + &delta) / (&delta + Rational::one()),
        );
        self.transfer_check(&mut list, &d, 2);
        let contracted_avec = self.contraction_check(&mut list, &d);

        let ratio_term = (&n - &max_delta - Rational::one()) / (&delta + Rational::one());
        let headline9 = ratio(3, 4) * &ratio_term * (Rational::one() + (&max_delta - &delta) / (r(3) * &n))
            + Rational::one();
        let check = list.check("avec_c(T^3[A]) <= (3/4)((n-Delta-1)/(delta+1))(1+(Delta-delta)/(3n)) + 1");
        let avec_c3 = match (&d.ecc_contracted, contracted_avec) {
            (Some(ecc), Some(avec)) => {
                self.rescaling_facts(check, ecc, &avec, "c'");
                let ceil_n = ceil_to_u64(&((&n - &max_delta + &delta) / (&delta + Rational::one()))).expect("positive");
                check
                    .le("|A| - 1", r(self.members.len() - 1), ratio_term.clone())
                    .le(
                        "(3/4)ceil(N) - 1/2",
                        ratio(3, 4) * int(ceil_n) - ratio(1, 2),
                        ratio(3, 4) * &ratio_term + Rational::one(),
                    )
                    .le("avec_c(T^3[A])", avec.clone(), headline9.clone());
                Some(avec)
            }
            _ => {
                check.eq("T^3[A] connected", Rational::zero(), Rational::one());
                None
            }
        };
        let bound = evaluate_bound(BoundId::Thm1, self.n as u64, self.delta as u64, self.max_delta as u64)?;
        let check = list.check("avec(G) <= THM1 bound");
        if let Some(avec) = avec_c3 {
            check.le("avec(T)", d.avec_t.clone(), r(3) * avec + r(4));
        }
        check
            .le("3 * step (9) + 4", r(3) * &headline9 + r(4), bound.clone())
            .le("avec(G)", d.avec_g.clone(), bound);
        Ok(list.finish())
    }

    fn thm3_checks(&self) -> Result<Vec<Check>> {
        let d = self.derive()?;
        let n = r(self.n);
        let mut list = Checklist::default();
        list.check("G is C4-free").eq(
            "4-cycles found",
            r(usize::from(!self.g.is_c4_free())),
            r(0),
        );
        self.packing_check(&mut list, "A is a 4-packing with coverage radius 4");
        let check = list.check("|N^2[v1]| >= eps_Delta and |N^2[a]| >= eps_delta");
        let ball = |a: usize| {
            self.g
                .bounded_distances(a, 2)
                .iter()
                .filter(|&&x| x != UNREACHABLE)
                .count()
        };
        check.ge("|N^2[v1]|", r(ball(self.anchor)), self.floors.anchor.clone());
        if let Some(min) = self.others().map(ball).min() {
            check.ge("min |N^2[a]|, a in A - v1", r(min), self.floors.other.clone());
        }
        self.tree_check(
            &mut list,
            "T is a spanning tree, distance preserving from A, with deg_T(v1) = Delta",
            true,
        );
        self.weight_check(&mut list, "weights c(v1) >= eps_Delta, c(a) >= eps_delta, sum c = n");
        self.transfer_check(&mut list, &d, 4);
        let contracted_avec = self.contraction_check(&mut list, &d);

        let bound = evaluate_bound(BoundId::Thm3, self.n as u64, self.delta as u64, self.max_delta as u64)?;
        let shift = &self.floors.anchor - &self.floors.other;
        let big_n = (&n - &shift) / &self.floors.other;
        let step7 = ratio(3, 4) * &big_n * (Rational::one() + &shift / (r(3) * &n)) + ratio(1, 4);
        let check = list.check("avec(G) <= THM3 bound");
        check.le("avec(G)", d.avec_g.clone(), d.avec_t.clone());
        match (&d.ecc_contracted, contracted_avec) {
            (Some(ecc), Some(avec)) => {
                self.rescaling_facts(check, ecc, &avec, "c''");
                let ceil_n = ceil_to_u64(&big_n).expect("positive");
                check
                    .le("|A|", r(self.members.len()), big_n.clone())
                    .le(
                        "(3/4)ceil(N'') - 1/2",
                        ratio(3, 4) * int(ceil_n) - ratio(1, 2),
                        ratio(3, 4) * &big_n + ratio(1, 4),
                    )
                    .le("avec_c(T^5[A])", avec.clone(), step7.clone())
                    .le("avec(T)", d.avec_t.clone(), r(5) * avec + r(8));
            }
            _ => {
                check.eq("T^5[A] connected", Rational::zero(), Rational::one());
            }
        }
        check
            .le("5 * step + 8", r(5) * step7 + r(8), bound.clone())
            .le("avec(G)", d.avec_g.clone(), bound);
        Ok(list.finish())
    }
}
