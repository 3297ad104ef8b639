//! Vertex minimization by greedy down-flips with random up-flip bursts,
//! plus bounded exploration of the flip graph by isomorphism class.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::balance::Coloring;
use crate::complex::{Complex, Face, Vertex};
use crate::error::{Error, Result};
use crate::flips::{
    apply_flip, flip_catalog, full_scan, refresh_cache, Embedding, EmbeddingCache, FlipKind,
    FlipTemplate,
};

/// Vertices satisfying the necessary condition for removal by a
/// down-flip: their link has exactly 2d vertices. A superset of the
/// truly removable vertices.
pub fn removable_candidates(complex: &Complex) -> Vec<Vertex> {
    let d = complex.dim().max(0) as usize;
    let adjacency = complex.skeleton_adjacency();
    let mut out: Vec<Vertex> = complex
        .vertex_set()
        .iter()
        .copied()
        .filter(|v| adjacency[v].len() == 2 * d)
        .collect();
    out.sort_unstable();
    out
}

/// The greedy objective, maximized lexicographically: first the number
/// of minimum-degree (2d) vertices, then the sum of squared degrees.
pub fn score(complex: &Complex) -> (usize, u64) {
    let d = complex.dim().max(0) as usize;
    let adjacency = complex.skeleton_adjacency();
    let mut count_2d = 0usize;
    let mut sumsq = 0u64;
    for neighbors in adjacency.values() {
        if neighbors.len() == 2 * d {
            count_2d += 1;
        }
        sumsq += (neighbors.len() as u64).pow(2);
    }
    (count_2d, sumsq)
}

/// One applied flip, for reproducible run logs.
#[derive(Clone, Debug)]
pub struct FlipEvent {
    pub step: usize,
    pub template: String,
    pub kind: FlipKind,
    pub removed_facets: Vec<Face>,
    pub added_facets: Vec<Face>,
}

/// Knobs for [`reduce`]. Budget counts every applied flip, up or down.
#[derive(Clone, Debug)]
pub struct ReduceOptions {
    pub budget: usize,
    pub seed: u64,
    /// Number of random up-flips applied when no down-flip is available.
    pub upflip_burst: usize,
    /// Stop as soon as the current complex has at most this many vertices.
    pub target_f0: Option<usize>,
    /// Edges no flip may remove.
    pub protected: Vec<Face>,
    pub time_limit: Option<Duration>,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            budget: 500,
            seed: 0,
            upflip_burst: 3,
            target_f0: None,
            protected: Vec::new(),
            time_limit: None,
        }
    }
}

/// The state a reduction run carries and returns.
pub struct SearchState {
    pub complex: Complex,
    pub coloring: Coloring,
    pub cache: EmbeddingCache,
    pub catalog: Vec<FlipTemplate>,
    /// Smallest-vertex-count complex seen, with its coloring.
    pub best: Complex,
    pub best_coloring: Coloring,
    pub history: Vec<FlipEvent>,
    pub flips_used: usize,
    protected: Vec<Face>,
    rng: ChaCha8Rng,
}

impl SearchState {
    /// Validates the input and prepares the initial embedding cache.
    pub fn new(complex: Complex, coloring: Coloring, options: &ReduceOptions) -> Result<Self> {
        let d = complex.dim().max(0) as usize;
        if !coloring.is_proper(&complex) {
            return Err(Error::NotBalanced(d + 1));
        }
        let mut protected = Vec::new();
        for e in &options.protected {
            let mut e = e.clone();
            e.sort_unstable();
            if e.len() != 2 || !complex.has_face(&e) {
                return Err(Error::BadConstraint(e));
            }
            protected.push(e);
        }
        protected.sort_unstable();
        protected.dedup();
        let catalog = flip_catalog(d);
        let cache = full_scan(&complex, &coloring, &catalog)?;
        Ok(SearchState {
            best: complex.clone(),
            best_coloring: coloring.clone(),
            complex,
            coloring,
            cache,
            catalog,
            history: Vec::new(),
            flips_used: 0,
            protected,
            rng: ChaCha8Rng::seed_from_u64(options.seed),
        })
    }

    /// Embeddings of the given kind that spare every protected edge.
    fn admissible(&self, kind: FlipKind) -> Vec<(usize, Embedding)> {
        self.catalog
            .iter()
            .enumerate()
            .filter(|(_, t)| t.kind == kind)
            .flat_map(|(idx, t)| {
                self.cache.per_template[idx]
                    .iter()
                    .filter(move |e| {
                        self.protected
                            .iter()
                            .all(|edge| !e.contains_edge_in_interior(t, edge))
                    })
                    .map(move |e| (idx, e.clone()))
            })
            .collect()
    }

    fn commit(&mut self, template_idx: usize, embedding: &Embedding) -> Result<()> {
        let template = &self.catalog[template_idx];
        let result = apply_flip(&self.complex, &self.coloring, template, embedding)?;
        let refreshed = refresh_cache(
            &self.complex,
            &result.complex,
            &result.coloring,
            &self.catalog,
            &self.cache,
        )?;
        if std::env::var_os("CROSSFLIP_VERIFY_CACHE").is_some_and(|v| v == "1") {
            let rescan = full_scan(&result.complex, &result.coloring, &self.catalog)?;
            assert!(
                refreshed == rescan,
                "incremental cache diverged from full rescan"
            );
        }
        self.history.push(FlipEvent {
            step: self.flips_used,
            template: template.name.clone(),
            kind: template.kind,
            removed_facets: result.removed_facets,
            added_facets: result.added_facets,
        });
        self.flips_used += 1;
        self.complex = result.complex;
        self.coloring = result.coloring;
        self.cache = refreshed;
        if self.complex.n_vertices() < self.best.n_vertices() {
            self.best = self.complex.clone();
            self.best_coloring = self.coloring.clone();
        }
        Ok(())
    }

    fn reached_target(&self, options: &ReduceOptions) -> bool {
        options
            .target_f0
            .is_some_and(|t| self.complex.n_vertices() <= t)
    }
}

/// Greedy reduction: apply the admissible down-flip whose result scores
/// highest (ties broken by the seeded generator); when none applies,
/// kick the state with a burst of random up-flips. Tracks the best
/// complex by vertex count and stops at the flip budget, the target
/// vertex count, or the time limit.
pub fn reduce(complex: &Complex, coloring: &Coloring, options: &ReduceOptions) -> Result<SearchState> {
    let mut state = SearchState::new(complex.clone(), coloring.clone(), options)?;
    let started = Instant::now();
    let out_of_time =
        |start: Instant| options.time_limit.is_some_and(|limit| start.elapsed() >= limit);

    while state.flips_used < options.budget
        && !state.reached_target(options)
        && !out_of_time(started)
    {
        let down = state.admissible(FlipKind::Down);
        if !down.is_empty() {
            // Score every candidate by tentatively applying it; the
            // candidate list is in canonical order, so the parallel map
            // is deterministic.
            let scored: Vec<(usize, u64)> = down
                .par_iter()
                .map(|(idx, e)| {
                    let result = apply_flip(&state.complex, &state.coloring, &state.catalog[*idx], e)
                        .expect("cached embeddings are fresh");
                    score(&result.complex)
                })
                .collect();
            let best_score = *scored.iter().max().expect("non-empty");
            let ties: Vec<usize> = (0..down.len())
                .filter(|&i| scored[i] == best_score)
                .collect();
            let chosen = if ties.len() == 1 {
                ties[0]
            } else {
                ties[state.rng.gen_range(0..ties.len())]
            };
            let (idx, e) = down[chosen].clone();
            state.commit(idx, &e)?;
            continue;
        }
        // Local minimum: kick with random up-flips, two-stage uniform
        // (template first, then site).
        for _ in 0..options.upflip_burst {
            if state.flips_used >= options.budget || out_of_time(started) {
                break;
            }
            let up = state.admissible(FlipKind::Up);
            if up.is_empty() {
                break;
            }
            let mut up_templates: Vec<usize> = up.iter().map(|(idx, _)| *idx).collect();
            up_templates.dedup();
            let t = up_templates[state.rng.gen_range(0..up_templates.len())];
            let sites: Vec<&Embedding> =
                up.iter().filter(|(idx, _)| *idx == t).map(|(_, e)| e).collect();
            let e = sites[state.rng.gen_range(0..sites.len())].clone();
            state.commit(t, &e)?;
        }
    }
    Ok(state)
}

/// Whether no admissible down-flip exists at all. Every non-trivial
/// down-flip removes at least one vertex, so this is equivalent to
/// having no removable vertex.
pub fn is_irreducible(complex: &Complex, coloring: &Coloring) -> Result<bool> {
    let d = complex.dim().max(0) as usize;
    if !coloring.is_proper(complex) {
        return Err(Error::NotBalanced(d + 1));
    }
    // Cheap necessary condition first.
    if removable_candidates(complex).is_empty() {
        return Ok(true);
    }
    let catalog = flip_catalog(d);
    for (idx, t) in catalog.iter().enumerate() {
        if t.kind == FlipKind::Down
            && !crate::flips::find_embeddings(complex, coloring, t, idx)?.is_empty()
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One isomorphism class in the flip graph.
#[derive(Clone, Debug)]
pub struct FlipGraphNode {
    pub complex: Complex,
    pub coloring: Coloring,
    pub f0: usize,
}

/// The explored portion of the flip graph: nodes are isomorphism
/// classes, edges connect classes one flip apart.
#[derive(Clone, Debug, Default)]
pub struct FlipGraph {
    pub nodes: Vec<FlipGraphNode>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl FlipGraph {
    /// DOT rendering with one rank row per vertex count.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flips {\n  rankdir=TB;\n  node [shape=box];\n");
        let mut by_f0: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (i, node) in self.nodes.iter().enumerate() {
            by_f0.entry(node.f0).or_default().push(i);
            out.push_str(&format!(
                "  n{} [label=\"{}\"];\n",
                i,
                node.complex.f_vector()
            ));
        }
        for (f0, ids) in &by_f0 {
            let names: Vec<String> = ids.iter().map(|i| format!("n{i}")).collect();
            out.push_str(&format!(
                "  {{ rank=same; // f0 = {f0}\n    {}; }}\n",
                names.join("; ")
            ));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  n{a} -- n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first exploration of flip space up to isomorphism, starting
/// from one complex. Up-flips are only expanded from nodes below the
/// vertex cap; the walk is not guaranteed to enumerate every balanced
/// triangulation.
pub fn explore_flip_graph(
    complex: &Complex,
    coloring: &Coloring,
    f0_cap: usize,
    sufficient_only: bool,
) -> Result<FlipGraph> {
    let d = complex.dim().max(0) as usize;
    if !coloring.is_proper(complex) {
        return Err(Error::NotBalanced(d + 1));
    }
    let catalog: Vec<FlipTemplate> = flip_catalog(d)
        .into_iter()
        .filter(|t| !sufficient_only || t.sufficient)
        .collect();
    let mut graph = FlipGraph {
        nodes: vec![FlipGraphNode {
            complex: complex.clone(),
            coloring: coloring.clone(),
            f0: complex.n_vertices(),
        }],
        edges: BTreeSet::new(),
    };
    let mut frontier = std::collections::VecDeque::from([0usize]);
    while let Some(current) = frontier.pop_front() {
        let node = graph.nodes[current].clone();
        for (idx, template) in catalog.iter().enumerate() {
            if template.kind == FlipKind::Up && node.f0 >= f0_cap {
                continue;
            }
            for e in crate::flips::find_embeddings(&node.complex, &node.coloring, template, idx)? {
                let result = apply_flip(&node.complex, &node.coloring, template, &e)?;
                let found = existing_class(&graph, &result.complex)?;
                let other = match found {
                    Some(i) => i,
                    None => {
                        graph.nodes.push(FlipGraphNode {
                            f0: result.complex.n_vertices(),
                            complex: result.complex,
                            coloring: result.coloring,
                        });
                        frontier.push_back(graph.nodes.len() - 1);
                        graph.nodes.len() - 1
                    }
                };
                if other != current {
                    graph
                        .edges
                        .insert((current.min(other), current.max(other)));
                }
            }
        }
    }
    Ok(graph)
}

fn existing_class(graph: &FlipGraph, candidate: &Complex) -> Result<Option<usize>> {
    for (i, node) in graph.nodes.iter().enumerate() {
        if crate::iso::is_isomorphic(&node.complex, candidate)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
