//! Cross-flip templates: the exchangeable sub-balls of the cross-polytope
//! boundary.
//!
//! Every facet of the cross-polytope boundary picks, for each antipodal
//! pair `(i, v_i)`, either the "positive" vertex `i` or the "negative"
//! vertex `v_i`. Grouping facets by the first position that goes negative
//! (position d+1 meaning "none") partitions them into d+2 blocks; the
//! template Φ_I is the union of the blocks named by `I`. Because blocks
//! partition the facets, the complement of Φ_I inside the sphere is
//! exactly Φ_{I^c}, so the family is closed under complementation and each
//! non-trivial pair (Φ_I, Φ_{I^c}) yields two directed flips: remove an
//! induced copy of one side, glue in the other along the shared boundary.

mod embed;

pub use embed::{
    apply_flip, find_embeddings, full_scan, refresh_cache, Embedding, EmbeddingCache, FlipResult,
};

use std::collections::VecDeque;

use crate::complex::{Complex, Face, FVector, Vertex};
use crate::error::{Error, Result};
use crate::iso::is_isomorphic;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlipKind {
    /// Adds vertices.
    Up,
    /// Removes vertices.
    Down,
}

/// One directed flip: cut out an induced copy of `phi`, glue in
/// `complement` along the common `boundary` sphere.
#[derive(Clone, Debug)]
pub struct FlipTemplate {
    /// Stable id, e.g. `[3]->[0,1,2,4]`, from the generating index sets.
    pub name: String,
    pub dim: usize,
    /// Block indices generating the source side.
    pub index_set: Vec<usize>,
    /// Block indices generating the target side.
    pub co_index_set: Vec<usize>,
    /// The region to remove (on canonical cross-polytope labels).
    pub phi: Complex,
    /// The region to glue in.
    pub complement: Complex,
    /// Shared boundary sphere of both regions.
    pub boundary: Complex,
    pub kind: FlipKind,
    /// Face-count change `f_k(complement) - f_k(phi)` for k = 0..=d.
    pub delta_f: Vec<i64>,
    /// Member of the default generating subset (2^d directed templates).
    pub sufficient: bool,
    // Matching precomputation over phi's dual graph.
    pub(crate) dual_adjacency: Vec<Vec<usize>>,
    pub(crate) bfs_order: Vec<usize>,
    pub(crate) bfs_parent: Vec<Option<usize>>,
    pub(crate) dual_diameter: usize,
}

impl FlipTemplate {
    /// Color of a canonical template vertex: label mod (d+1), so each
    /// antipodal pair shares its color.
    pub fn color_of(&self, template_vertex: Vertex) -> usize {
        template_vertex as usize % (self.dim + 1)
    }
}

/// The union of first-negative blocks named by `index_set`, as a complex
/// on the canonical labels of [`crate::complex::cross_polytope_boundary`].
///
/// `index_set` must be a non-empty subset of `{0, ..., d+1}`; indices out
/// of range panic (caller bug).
pub fn phi_complex(index_set: &[usize], d: usize) -> Result<Complex> {
    if index_set.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    assert!(
        index_set.iter().all(|&i| i <= d + 1),
        "phi block index out of range 0..={}",
        d + 1
    );
    let facets = block_facets(index_set, d);
    assert!(!facets.is_empty());
    Ok(Complex::from_maximal_unchecked(facets))
}

/// Facets of ∂C_{d+1} whose first negative position lies in `index_set`.
fn block_facets(index_set: &[usize], d: usize) -> Vec<Face> {
    let mut facets = Vec::new();
    for signs in 0u32..1 << (d + 1) {
        let first_negative = (0..=d).find(|i| signs >> i & 1 == 1).unwrap_or(d + 1);
        if !index_set.contains(&first_negative) {
            continue;
        }
        let mut facet: Face = (0..=d)
            .map(|i| {
                if signs >> i & 1 == 1 {
                    (d + 1 + i) as Vertex
                } else {
                    i as Vertex
                }
            })
            .collect();
        facet.sort_unstable();
        facets.push(facet);
    }
    facets
}

/// Builds the single directed template generated by `index_set`: remove
/// Φ_I, glue Φ_{I^c}. Unlike the catalog this also accepts the trivial
/// star-for-star exchange (equal vertex counts report as `Down`).
pub fn template_for(index_set: &[usize], d: usize) -> Result<FlipTemplate> {
    assert!(d >= 1, "flips need dimension at least 1");
    let mut i_set = index_set.to_vec();
    i_set.sort_unstable();
    i_set.dedup();
    let co_set: Vec<usize> = (0..=d + 1).filter(|i| !i_set.contains(i)).collect();
    let phi = phi_complex(&i_set, d)?;
    let complement = phi_complex(&co_set, d)?;
    let fs = phi.f_vector();
    let ft = complement.f_vector();
    Ok(build_template(d, i_set, co_set, phi, complement, fs, ft, false))
}

/// Index of the catalog template undoing `catalog[idx]`: the one that
/// removes an isomorphic copy of what `catalog[idx]` glues in and glues
/// back what it removed. Every catalog entry has exactly one.
pub fn reverse_index(catalog: &[FlipTemplate], idx: usize) -> usize {
    let t = &catalog[idx];
    catalog
        .iter()
        .position(|r| {
            r.phi.f_vector() == t.complement.f_vector()
                && r.complement.f_vector() == t.phi.f_vector()
                && is_isomorphic(&r.phi, &t.complement).expect("templates are tiny")
                && is_isomorphic(&r.complement, &t.phi).expect("templates are tiny")
        })
        .expect("catalog pairs every template with a reverse")
}

/// Builds the full directed catalog for dimension `d`: one template per
/// isomorphism class of non-trivial flip, 2^{d+1} - 2 in total, sorted by
/// (source f-vector, target f-vector). The first 2^{d-1} complementary
/// pairs in that order are marked `sufficient`.
pub fn flip_catalog(d: usize) -> Vec<FlipTemplate> {
    assert!(d >= 1, "flips need dimension at least 1");
    struct Pending {
        i_set: Vec<usize>,
        co_set: Vec<usize>,
        source: Complex,
        target: Complex,
        fs: FVector,
        ft: FVector,
    }
    let full: Vec<usize> = (0..=d + 1).collect();
    let mut kept: Vec<Pending> = Vec::new();
    for mask in 1u32..(1 << (d + 2)) - 1 {
        let i_set: Vec<usize> = full.iter().copied().filter(|&i| mask >> i & 1 == 1).collect();
        let co_set: Vec<usize> = full.iter().copied().filter(|&i| mask >> i & 1 == 0).collect();
        let source = phi_complex(&i_set, d).expect("non-empty index set");
        let target = phi_complex(&co_set, d).expect("non-empty co-index set");
        let fs = source.f_vector();
        let ft = target.f_vector();
        if fs.f(0) == ft.f(0) {
            // Equal vertex counts only happen for the trivial star <-> star
            // exchange, which rebuilds an isomorphic complex; skip it.
            continue;
        }
        let duplicate = kept.iter().any(|k| {
            k.fs == fs
                && k.ft == ft
                && is_isomorphic(&k.source, &source).expect("templates are tiny")
                && is_isomorphic(&k.target, &target).expect("templates are tiny")
        });
        if !duplicate {
            kept.push(Pending { i_set, co_set, source, target, fs, ft });
        }
    }
    kept.sort_by(|a, b| (&a.fs.0, &a.ft.0).cmp(&(&b.fs.0, &b.ft.0)));

    // Pair each directed template with its reverse to pick the sufficient
    // generating subset: the first 2^{d-1} pairs by smaller-side f-vector.
    let n = kept.len();
    let mut partner = vec![usize::MAX; n];
    for i in 0..n {
        if partner[i] != usize::MAX {
            continue;
        }
        for j in i + 1..n {
            if partner[j] != usize::MAX {
                continue;
            }
            if kept[i].fs == kept[j].ft
                && kept[i].ft == kept[j].fs
                && is_isomorphic(&kept[i].source, &kept[j].target).expect("tiny")
                && is_isomorphic(&kept[i].target, &kept[j].source).expect("tiny")
            {
                partner[i] = j;
                partner[j] = i;
                break;
            }
        }
        assert_ne!(partner[i], usize::MAX, "every non-trivial flip has a reverse");
    }
    let mut pairs: Vec<(Vec<usize>, usize, usize)> = (0..n)
        .filter(|&i| i < partner[i])
        .map(|i| {
            let key = kept[i].fs.0.clone().min(kept[i].ft.0.clone());
            (key, i, partner[i])
        })
        .collect();
    pairs.sort();
    let mut sufficient = vec![false; n];
    for (_, i, j) in pairs.iter().take(1 << (d.saturating_sub(1))) {
        sufficient[*i] = true;
        sufficient[*j] = true;
    }

    kept.into_iter()
        .enumerate()
        .map(|(idx, k)| {
            build_template(d, k.i_set, k.co_set, k.source, k.target, k.fs, k.ft, sufficient[idx])
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn build_template(
    d: usize,
    index_set: Vec<usize>,
    co_index_set: Vec<usize>,
    phi: Complex,
    complement: Complex,
    fs: FVector,
    ft: FVector,
    sufficient: bool,
) -> FlipTemplate {
    let boundary = phi.boundary().expect("phi is pure");
    debug_assert_eq!(boundary, complement.boundary().expect("complement is pure"));
    let kind = if ft.f(0) > fs.f(0) {
        FlipKind::Up
    } else {
        FlipKind::Down
    };
    let delta_f: Vec<i64> = (0..=d as isize)
        .map(|k| ft.f(k) as i64 - fs.f(k) as i64)
        .collect();
    let dual = phi.dual_graph().expect("phi is pure");
    let (bfs_order, bfs_parent) = bfs_tree(&dual.adjacency);
    let name = format!(
        "[{}]->[{}]",
        index_set.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","),
        co_index_set.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","),
    );
    FlipTemplate {
        name,
        dim: d,
        index_set,
        co_index_set,
        dual_diameter: dual.diameter(),
        phi,
        complement,
        boundary,
        kind,
        delta_f,
        sufficient,
        dual_adjacency: dual.adjacency,
        bfs_order,
        bfs_parent,
    }
}

/// BFS order with parents over a connected graph; the parent of each
/// non-root node precedes it in the order.
fn bfs_tree(adjacency: &[Vec<usize>]) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = adjacency.len();
    let mut order = Vec::with_capacity(n);
    let mut parent_of = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                parent_of[v] = u;
                queue.push_back(v);
            }
        }
    }
    assert_eq!(order.len(), n, "template regions are strongly connected");
    let parents = order
        .iter()
        .map(|&u| (parent_of[u] != usize::MAX).then_some(parent_of[u]))
        .collect();
    (order, parents)
}
