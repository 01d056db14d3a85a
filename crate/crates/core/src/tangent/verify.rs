use std::collections::{BTreeSet, HashSet};

use super::build::{iterate_tangent, Flavor, Orientation, TangentGraph};
use super::maps::{differential_map, vertex_sections, SectionMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};
use crate::report::Report;

fn edge_set(g: &Graph) -> HashSet<(usize, usize)> {
    g.edges().iter().copied().collect()
}

fn undirected(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Checks the five counting formulas:
///
/// 1. `|V_tG| = |V_τG| = 2|E|`
/// 2. `deg_tG(u) = deg(π₊u) + deg(πu) − 1`
/// 3. `deg_τG(u) = Adeg(πu)`
/// 4. `|E_tG| + |E| = Σ deg²`
/// 5. `|E_τG| = ½ Σ deg·Adeg`
pub fn verify_counting(g: &Graph) -> Report {
    let t = TangentGraph::t(g);
    let tau = TangentGraph::tau(g);
    verify_counting_with(g, &t, &tau)
}

pub(crate) fn verify_counting_with(g: &Graph, t: &TangentGraph, tau: &TangentGraph) -> Report {
    let table = t.table();
    let deg = g.degree_sequence();
    let adeg = g.adjacency_degree();
    let mut r = Report::new();

    let (vt, vtau, e2) = (t.graph().n(), tau.graph().n(), 2 * g.edge_count());
    r.record("vertex_count", vt == e2 && vtau == e2, || format!("|V_tG|={vt} |V_tauG|={vtau} 2|E|={e2}"));

    let bad = (0..table.len()).find(|&u| t.graph().degree(u) + 1 != deg[table.pi_plus(u)] + deg[table.pi(u)]);
    r.record_opt("tangent_degree", bad.map(|u| format!("deg_tG({})={}", t.vertex_name(u), t.graph().degree(u))));

    let bad = (0..table.len()).find(|&u| tau.graph().degree(u) != adeg[table.pi(u)]);
    r.record_opt(
        "tau_degree",
        bad.map(|u| format!("deg_tauG({})={} Adeg={}", tau.vertex_name(u), tau.graph().degree(u), adeg[table.pi(u)])),
    );

    let sq: usize = deg.iter().map(|d| d * d).sum();
    let et = t.graph().edge_count();
    r.record("tangent_edge_count", et + g.edge_count() == sq, || {
        format!("|E_tG|={et} |E|={} sum deg^2={sq}", g.edge_count())
    });

    let weighted: usize = deg.iter().zip(&adeg).map(|(d, a)| d * a).sum();
    let etau = tau.graph().edge_count();
    r.record("tau_edge_count", 2 * etau == weighted, || format!("|E_tauG|={etau} sum deg*Adeg={weighted}"));
    r
}

/// Outcome of [`verify_extremal`].
#[derive(Clone, Debug)]
pub struct ExtremalReport {
    pub report: Report,
    /// Whether `E_tG = E_τG`.
    pub tangent_equals_tau: bool,
    /// Every component is a star `K₁,ₙ` or an isolated vertex.
    pub star_forest: bool,
    /// `g` is a single star `K₁,ₙ`, `n ≥ 1`.
    pub star: bool,
    /// An edge of `τG` that `σ` does not preserve, if any.
    pub sigma_tau_witness: Option<String>,
    /// An edge of `τG` that `π₊` does not carry to an edge of `G`, if any.
    pub pi_plus_tau_witness: Option<String>,
}

/// Number of sampled sections checked when full enumeration is too large.
const SECTION_SAMPLES: usize = 64;

fn name_pair(tg: &TangentGraph, (a, b): (usize, usize)) -> String {
    format!("{{{}, {}}}", tg.vertex_name(a), tg.vertex_name(b))
}

/// Checks the extremal characterisations of `tG` and `τG` and the
/// homomorphism properties of `σ`, `π` and `π₊`.
///
/// `E_tG = E_τG` is compared against star forests: for disconnected graphs
/// such as `K₂ ⊔ K₂` equality holds without `g` being a single star.
pub fn verify_extremal(g: &Graph) -> ExtremalReport {
    let t = TangentGraph::t(g);
    let tau = TangentGraph::tau(g);
    let gstar = TangentGraph::gstar(g);
    let table = t.table();
    let sigma = VertexMap::new(table.sigmas().to_vec());
    let pi = VertexMap::new(table.pis().to_vec());
    let pi_plus = VertexMap::new(table.pi_pluses().to_vec());
    let et = edge_set(t.graph());
    let etau = edge_set(tau.graph());
    let mut r = Report::new();

    r.record("tangent_equals_gstar", t.graph().same_structure(gstar.graph()), || {
        format!("|E_tG|={} |E_*|={}", et.len(), gstar.graph().edge_count())
    });

    // Closing E_* under σ adds nothing.
    let sigma_closed =
        gstar.graph().edges().iter().all(|&(a, b)| gstar.graph().has_edge(table.sigma(a), table.sigma(b)));
    r.record("gstar_sigma_closed", sigma_closed, || "sigma(E_*) not contained in E_*".into());

    let hom = |h: &VertexMap, from: &TangentGraph, to: &Graph| {
        h.homomorphism_violation(from.graph(), to).expect("dimensions agree").map(|e| name_pair(from, e))
    };
    r.record_opt("sigma_hom_tangent", hom(&sigma, &t, t.graph()));
    r.record_opt("pi_hom_tangent", hom(&pi, &t, g));
    r.record_opt("pi_plus_hom_tangent", hom(&pi_plus, &t, g));
    r.record_opt("pi_hom_tau", hom(&pi, &tau, g));

    // τG is the largest graph on V_* over which π is a homomorphism.
    let mut maximal = None;
    'outer: for u in 0..table.len() {
        for v in u + 1..table.len() {
            if tau.graph().has_edge(u, v) != g.has_edge(table.pi(u), table.pi(v)) {
                maximal = Some(name_pair(&tau, (u, v)));
                break 'outer;
            }
        }
    }
    r.record_opt("tau_is_pi_maximal", maximal);

    // E_τG = {{il, jk} : {i,j} ∈ E}.
    let mut generated = HashSet::new();
    for &(i, j) in g.edges() {
        for a in table.based_at(i) {
            for b in table.based_at(j) {
                generated.insert(undirected(a, b));
            }
        }
    }
    r.record("tau_section_generated", generated == etau, || {
        format!("generated {} edges, |E_tauG|={}", generated.len(), etau.len())
    });

    let sections = match vertex_sections(g, SectionMode::All { force: false }) {
        Ok(all) => Some(all.collect::<Vec<_>>()),
        Err(Error::TooManySections { .. }) => Some(
            vertex_sections(g, SectionMode::Sample { count: SECTION_SAMPLES, seed: 0 })
                .expect("no isolated vertices")
                .collect(),
        ),
        Err(_) => None,
    };
    let bad_section = sections.into_iter().flatten().find_map(|s| {
        let projects = (0..g.n()).all(|i| table.pi(s.apply(i)) == i);
        let bad = s.homomorphism_violation(g, tau.graph()).expect("dimensions agree");
        match (projects, bad) {
            (true, None) => None,
            (false, _) => Some(format!("section {:?} is not a section", s.image)),
            (true, Some((a, b))) => Some(format!("section {:?} breaks edge {{{a}, {b}}}", s.image)),
        }
    });
    r.record_opt("sections_hom_tau", bad_section);

    let missing = et.iter().find(|e| !etau.contains(e)).copied();
    r.record_opt("tangent_subgraph_of_tau", missing.map(|e| name_pair(&t, e)));

    let tangent_equals_tau = et == etau;
    let star_forest = g.is_star_forest();
    r.record("equality_iff_star_forest", tangent_equals_tau == star_forest, || {
        format!("E_tG=E_tauG is {tangent_equals_tau}, star forest is {star_forest}")
    });

    ExtremalReport {
        report: r,
        tangent_equals_tau,
        star_forest,
        star: g.is_star(),
        sigma_tau_witness: hom(&sigma, &tau, tau.graph()),
        pi_plus_tau_witness: hom(&pi_plus, &tau, g),
    }
}

fn require(tg: &TangentGraph, flavor: Flavor) -> Result<()> {
    if tg.flavor() == flavor {
        Ok(())
    } else {
        Err(Error::WrongFlavor { expected: flavor, found: tg.flavor() })
    }
}

type Quad = (usize, usize, usize, usize);

/// Checks the `ℤ₂ × ℤ₂` action on `V_t²G` generated by `σ_tG` and `dσ`,
/// and that `dπ`, `dπ₊` are homomorphisms `t²G → tG`.
pub fn group_action_check(t2: &TangentGraph) -> Result<Report> {
    require(t2, Flavor::T2)?;
    let inner = t2.inner().expect("iterated");
    let outer = t2.outer_table().expect("iterated");
    let table = t2.table();
    let verts = t2.second_vertices().expect("iterated");
    let n = outer.len();

    let sigma_t: Vec<usize> = outer.sigmas().to_vec();
    let sigma = VertexMap::new(table.sigmas().to_vec());
    let d_sigma = differential_map(&sigma, outer, outer).image;
    let mut r = Report::new();

    let name = |a: usize| t2.vertex_name(a);
    let involution = |m: &[usize]| (0..n).find(|&a| m[m[a]] != a);
    r.record_opt("sigma_t_involution", involution(&sigma_t).map(name));
    r.record_opt("d_sigma_involution", involution(&d_sigma).map(name));
    r.record_opt("commute", (0..n).find(|&a| sigma_t[d_sigma[a]] != d_sigma[sigma_t[a]]).map(name));

    let hom = |m: &[usize], to: &Graph| {
        VertexMap::new(m.to_vec())
            .homomorphism_violation(t2.graph(), to)
            .expect("dimensions agree")
            .map(|e| name_pair(t2, e))
    };
    r.record_opt("sigma_t_hom", hom(&sigma_t, t2.graph()));
    r.record_opt("d_sigma_hom", hom(&d_sigma, t2.graph()));
    let composite: Vec<usize> = (0..n).map(|a| sigma_t[d_sigma[a]]).collect();
    r.record_opt("composite_hom", hom(&composite, t2.graph()));

    let d_pi = differential_map(&VertexMap::new(table.pis().to_vec()), outer, table).image;
    let d_pi_plus = differential_map(&VertexMap::new(table.pi_pluses().to_vec()), outer, table).image;
    r.record_opt("d_pi_hom", hom(&d_pi, inner.graph()));
    r.record_opt("d_pi_plus_hom", hom(&d_pi_plus, inner.graph()));

    let coords = |a: usize| {
        let v = verts[a];
        (v.i, v.j, v.k, v.l)
    };
    let formula = |m: &[usize], f: fn(Quad) -> Quad| (0..n).find(|&a| coords(m[a]) != f(coords(a))).map(name);
    r.record_opt("sigma_t_formula", formula(&sigma_t, |(i, j, k, l)| (k, l, i, j)));
    r.record_opt("d_sigma_formula", formula(&d_sigma, |(i, j, k, l)| (j, i, l, k)));
    r.record_opt("composite_formula", formula(&composite, |(i, j, k, l)| (l, k, j, i)));

    let bad_orbit = (0..n).find(|&a| {
        let orbit: BTreeSet<usize> = [a, sigma_t[a], d_sigma[a], composite[a]].into_iter().collect();
        !matches!(orbit.len(), 1 | 2 | 4)
    });
    r.record_opt("orbit_sizes_divide_4", bad_orbit.map(name));
    Ok(r)
}

/// Per-`u` orientation class sizes on `t²G`: one reflection,
/// `deg(π₊u) − 1` forward and `deg(πu) − 1` backward translations.
pub fn orientation_counts_check(t2: &TangentGraph) -> Result<Report> {
    require(t2, Flavor::T2)?;
    let inner = t2.inner().expect("iterated");
    let outer = t2.outer_table().expect("iterated");
    let table = t2.table();
    let base = t2.base();
    let verts = t2.second_vertices().expect("iterated");
    let mut r = Report::new();
    r.record_opt("all_classified", verts.iter().position(|a| a.orientation.is_none()).map(|a| t2.vertex_name(a)));
    let bad = (0..table.len()).find_map(|u| {
        let mut counts = [0usize; 3];
        for a in outer.based_at(u) {
            match verts[a].orientation {
                Some(Orientation::Reflection) => counts[0] += 1,
                Some(Orientation::Forward) => counts[1] += 1,
                Some(Orientation::Backward) => counts[2] += 1,
                None => {}
            }
        }
        let expected = [1, base.degree(table.pi_plus(u)) - 1, base.degree(table.pi(u)) - 1];
        let total_ok = counts.iter().sum::<usize>() == inner.graph().degree(u);
        (counts != expected || !total_ok)
            .then(|| format!("u={} counts={counts:?} expected={expected:?}", inner.vertex_name(u)))
    });
    r.record_opt("class_sizes", bad);
    Ok(r)
}

/// The fibre `V^i = {a : π²(a) = i}` of `tτG` and its two decompositions.
#[derive(Clone, Debug)]
pub struct FiberDecomposition {
    pub fiber: Vec<usize>,
    /// `(w, {a : π(a) = w})` for every `τG` vertex `w` based at `i`.
    pub by_tau_vertex: Vec<(usize, Vec<usize>)>,
    /// `(u, {a : dπ(a) = u})` for every directed edge `u` based at `i`.
    pub by_differential: Vec<(usize, Vec<usize>)>,
    pub report: Report,
}

/// Decomposes the fibre of `tτG` over base vertex `i`.
pub fn fiber_decomposition(tt: &TangentGraph, i: usize) -> Result<FiberDecomposition> {
    require(tt, Flavor::TTau)?;
    let table = tt.table();
    if i >= table.base_n() {
        return Err(Error::VertexOutOfRange { vertex: i, n: table.base_n() });
    }
    let outer = tt.outer_table().expect("iterated");
    let fiber: Vec<usize> = (0..outer.len()).filter(|&a| table.pi(outer.pi(a)) == i).collect();

    let by_tau_vertex: Vec<(usize, Vec<usize>)> = table.based_at(i).map(|w| (w, outer.based_at(w).collect())).collect();

    // dπ for π: τG → G.
    let d_pi = differential_map(&VertexMap::new(table.pis().to_vec()), outer, table).image;
    let by_differential: Vec<(usize, Vec<usize>)> =
        table.based_at(i).map(|u| (u, (0..outer.len()).filter(|&a| d_pi[a] == u).collect())).collect();

    let mut r = Report::new();
    let as_set = |parts: &[(usize, Vec<usize>)]| {
        let total: usize = parts.iter().map(|p| p.1.len()).sum();
        let set: BTreeSet<usize> = parts.iter().flat_map(|p| p.1.iter().copied()).collect();
        (total == set.len(), set)
    };
    let fiber_set: BTreeSet<usize> = fiber.iter().copied().collect();
    let (disjoint, set) = as_set(&by_tau_vertex);
    r.record("by_tau_vertex", disjoint && set == fiber_set, || format!("{} vs {} elements", set.len(), fiber.len()));
    let (disjoint, set) = as_set(&by_differential);
    r.record("by_differential", disjoint && set == fiber_set, || format!("{} vs {} elements", set.len(), fiber.len()));
    Ok(FiberDecomposition { fiber, by_tau_vertex, by_differential, report: r })
}

/// Runs [`group_action_check`] and [`orientation_counts_check`] on `t²G`
/// and [`fiber_decomposition`] on every fibre of `tτG`.
pub fn verify_second_order(g: &Graph) -> Report {
    let mut r = Report::new();
    let t2 = iterate_tangent(&TangentGraph::t(g)).expect("t iterates");
    r.absorb("group_action", group_action_check(&t2).expect("flavor t2"));
    r.absorb("orientation", orientation_counts_check(&t2).expect("flavor t2"));
    let tt = iterate_tangent(&TangentGraph::tau(g)).expect("tau iterates");
    let bad = (0..g.n()).find_map(|i| {
        let fd = fiber_decomposition(&tt, i).expect("valid vertex");
        let failed = fd.report.failures().next().map(|c| format!("i={i}: {}", c.name));
        failed
    });
    r.record_opt("fiber_decomposition", bad);
    r
}
