use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::build::TangentGraph;
use super::edges::DirectedEdgeTable;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};
use crate::report::Report;

/// The differential `dh(ij) = h(i)h(j)` of a homomorphism `h: H → K`,
/// together with the homomorphism checks it satisfies.
#[derive(Clone, Debug)]
pub struct Differential {
    /// Directed-edge indices of `H` to directed-edge indices of `K`.
    pub map: VertexMap,
    /// `t_to_t`, `tau_to_tau` and `t_to_tau`.
    pub report: Report,
}

/// Computes `dh` without any checks. `h` must be a homomorphism.
pub(crate) fn differential_map(h: &VertexMap, from: &DirectedEdgeTable, to: &DirectedEdgeTable) -> VertexMap {
    VertexMap::new(
        from.edges()
            .iter()
            .map(|&(i, j)| to.index_of(h.apply(i), h.apply(j)).expect("homomorphism maps edges to edges"))
            .collect(),
    )
}

/// The differential of `h: H → K` on directed edges, verified to be a
/// homomorphism `tH → tK`, `τH → τK` and `tH → τK`.
pub fn differential_of_hom(h: &VertexMap, big_h: &Graph, big_k: &Graph) -> Result<Differential> {
    if let Some((a, b)) = h.homomorphism_violation(big_h, big_k)? {
        return Err(Error::NotAHomomorphism(a, b));
    }
    let (th, tk) = (TangentGraph::t(big_h), TangentGraph::t(big_k));
    let (tauh, tauk) = (TangentGraph::tau(big_h), TangentGraph::tau(big_k));
    let map = differential_map(h, th.table(), tk.table());
    let mut report = Report::new();
    for (name, from, to) in [("t_to_t", &th, &tk), ("tau_to_tau", &tauh, &tauk), ("t_to_tau", &th, &tauk)] {
        let bad = map.homomorphism_violation(from.graph(), to.graph())?;
        report.record_opt(name, bad.map(|(a, b)| format!("{{{}, {}}}", from.vertex_name(a), from.vertex_name(b))));
    }
    Ok(Differential { map, report })
}

/// Full enumeration is refused above this many sections unless forced.
pub const SECTION_LIMIT: u64 = 1 << 20;

/// How [`vertex_sections`] produces sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionMode {
    /// Every section, in mixed-radix order over neighbour lists.
    All { force: bool },
    /// `count` independent uniform sections from a seeded ChaCha8 stream.
    Sample { count: usize, seed: u64 },
}

/// `Π deg(i)`, the number of vertex sections.
pub fn section_count(g: &Graph) -> BigUint {
    (0..g.n()).map(|i| BigUint::from(g.degree(i))).product()
}

/// Iterator over vertex sections `s: V_G → V_*` with `π ∘ s = id`.
pub struct Sections<'a> {
    table: DirectedEdgeTable,
    g: &'a Graph,
    state: SectionState,
}

enum SectionState {
    Enumerate { digits: Vec<usize>, done: bool },
    Sample { rng: Box<ChaCha8Rng>, remaining: usize },
}

impl Sections<'_> {
    fn section(&self, digits: &[usize]) -> VertexMap {
        VertexMap::new(digits.iter().enumerate().map(|(i, &d)| self.table.based_at(i).start + d).collect())
    }
}

impl Iterator for Sections<'_> {
    type Item = VertexMap;

    fn next(&mut self) -> Option<VertexMap> {
        match &mut self.state {
            SectionState::Enumerate { digits, done } => {
                if *done {
                    return None;
                }
                let current = digits.clone();
                // Increment, least significant digit last.
                *done = true;
                for i in (0..digits.len()).rev() {
                    digits[i] += 1;
                    if digits[i] < self.g.degree(i) {
                        *done = false;
                        break;
                    }
                    digits[i] = 0;
                }
                Some(self.section(&current))
            }
            SectionState::Sample { rng, remaining } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let digits: Vec<usize> = (0..self.g.n()).map(|i| rng.gen_range(0..self.g.degree(i))).collect();
                Some(self.section(&digits))
            }
        }
    }
}

/// Vertex sections of `g`. Every vertex must have positive degree.
pub fn vertex_sections(g: &Graph, mode: SectionMode) -> Result<Sections<'_>> {
    if let Some(i) = (0..g.n()).find(|&i| g.degree(i) == 0) {
        return Err(Error::IsolatedVertex(i));
    }
    let state = match mode {
        SectionMode::All { force } => {
            let count = section_count(g);
            if !force && count > BigUint::from(SECTION_LIMIT) {
                return Err(Error::TooManySections { count: count.to_string(), limit: SECTION_LIMIT });
            }
            SectionState::Enumerate { digits: vec![0; g.n()], done: false }
        }
        SectionMode::Sample { count, seed } => {
            SectionState::Sample { rng: Box::new(ChaCha8Rng::seed_from_u64(seed)), remaining: count }
        }
    };
    Ok(Sections { table: DirectedEdgeTable::new(g), g, state })
}
