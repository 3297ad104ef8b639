//! Locating flip sites and rewriting the complex.
//!
//! A template matches wherever the host contains an induced subcomplex
//! isomorphic to its removable region. Search runs on dual graphs first:
//! enumerate monomorphisms of the template's facet-adjacency graph into
//! the host's (VF2-style, growing along a BFS tree), then lift each facet
//! map to a vertex map by propagating ridge identifications, and finally
//! filter to images that are induced in the host. Images are deduplicated,
//! so each flip site is reported exactly once, in canonical order.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use itertools::Itertools;
use rayon::prelude::*;

use super::FlipTemplate;
use crate::balance::Coloring;
use crate::complex::{face_intersection, Complex, DualGraph, Face, Vertex};
use crate::error::{Error, Result};

/// One located flip site: a simplicial isomorphism from a template's
/// removable region onto an induced subcomplex of the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// Index into the catalog this embedding was found for.
    pub template_idx: usize,
    /// Template vertex (canonical label) -> host vertex.
    pub vertex_map: BTreeMap<Vertex, Vertex>,
    /// Host facets forming the image, sorted.
    pub image_facets: Vec<Face>,
}

impl Embedding {
    /// Site identity: two embeddings with equal keys differ only by a
    /// template automorphism and produce the same flip.
    pub fn key(&self) -> (usize, &[Face]) {
        (self.template_idx, &self.image_facets)
    }

    /// Sorted vertex set of the image.
    pub fn image_vertices(&self) -> Face {
        let mut vs: Face = self.image_facets.iter().flatten().copied().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Whether `edge` (host labels) lies in the open interior of the
    /// image, i.e. would be destroyed by applying this flip.
    pub fn contains_edge_in_interior(&self, template: &FlipTemplate, edge: &[Vertex]) -> bool {
        let reverse: HashMap<Vertex, Vertex> =
            self.vertex_map.iter().map(|(&t, &h)| (h, t)).collect();
        let preimage: Option<Face> = edge
            .iter()
            .map(|v| reverse.get(v).copied())
            .collect::<Option<Vec<_>>>()
            .map(|mut f| {
                f.sort_unstable();
                f
            });
        match preimage {
            Some(te) => template.phi.has_face(&te) && !template.boundary.has_face(&te),
            None => false,
        }
    }
}

/// Everything `apply_flip` produces: the rewritten complex plus the exact
/// facet and vertex turnover, for logs and cache maintenance.
#[derive(Clone, Debug)]
pub struct FlipResult {
    pub complex: Complex,
    pub coloring: Coloring,
    pub removed_facets: Vec<Face>,
    pub added_facets: Vec<Face>,
    /// Host labels invented for the glued region's interior, ascending.
    pub fresh_vertices: Vec<Vertex>,
    /// Host labels that left the complex, ascending.
    pub removed_vertices: Vec<Vertex>,
}

/// Embeddings per catalog template, each list in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmbeddingCache {
    pub per_template: Vec<Vec<Embedding>>,
}

impl EmbeddingCache {
    pub fn total(&self) -> usize {
        self.per_template.iter().map(|v| v.len()).sum()
    }
}

/// Finds every induced copy of `template.phi` in the host, one embedding
/// per image. The host must be colored (colors transport to the glued
/// region when flips are applied).
pub fn find_embeddings(
    host: &Complex,
    coloring: &Coloring,
    template: &FlipTemplate,
    template_idx: usize,
) -> Result<Vec<Embedding>> {
    if host.dim() != template.dim as isize {
        return Err(Error::DimMismatch {
            template: template.dim as isize,
            host: host.dim(),
        });
    }
    let dual = host.dual_graph()?;
    Ok(enumerate_embeddings(
        host,
        &dual,
        coloring,
        template,
        template_idx,
        None,
        None,
    ))
}

/// Scans the whole catalog. Templates are searched in parallel; the
/// result is deterministic regardless of thread count.
pub fn full_scan(
    host: &Complex,
    coloring: &Coloring,
    catalog: &[FlipTemplate],
) -> Result<EmbeddingCache> {
    if let Some(t) = catalog.first() {
        if host.dim() != t.dim as isize {
            return Err(Error::DimMismatch {
                template: t.dim as isize,
                host: host.dim(),
            });
        }
    }
    let dual = host.dual_graph()?;
    let per_template: Vec<Vec<Embedding>> = catalog
        .par_iter()
        .enumerate()
        .map(|(idx, t)| enumerate_embeddings(host, &dual, coloring, t, idx, None, None))
        .collect();
    Ok(EmbeddingCache { per_template })
}

/// Updates a cache across one flip without a full rescan.
///
/// Let W be the vertices of the facets the flip removed or added. Every
/// face the flip created or destroyed is supported on W, so an embedding
/// whose image avoids W is valid in `new` iff it was valid in `old`: those
/// are kept verbatim. Embeddings whose image meets W are re-enumerated
/// inside the dual-graph ball of radius `template.dual_diameter` around
/// the facets touching W, which contains every such image.
pub fn refresh_cache(
    old: &Complex,
    new: &Complex,
    new_coloring: &Coloring,
    catalog: &[FlipTemplate],
    cache: &EmbeddingCache,
) -> Result<EmbeddingCache> {
    assert_eq!(
        cache.per_template.len(),
        catalog.len(),
        "cache shape matches catalog"
    );
    let removed = facet_diff(old.facets(), new.facets());
    let added = facet_diff(new.facets(), old.facets());
    let mut affected: HashSet<Vertex> = HashSet::new();
    for f in removed.iter().chain(added.iter()) {
        affected.extend(f.iter().copied());
    }
    let dual = new.dual_graph()?;
    let touching: Vec<usize> = new
        .facets()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.iter().any(|v| affected.contains(v)))
        .map(|(i, _)| i)
        .collect();
    let per_template: Vec<Vec<Embedding>> = catalog
        .par_iter()
        .enumerate()
        .map(|(idx, template)| {
            let mut kept: Vec<Embedding> = cache.per_template[idx]
                .iter()
                .filter(|e| e.image_vertices().iter().all(|v| !affected.contains(v)))
                .cloned()
                .collect();
            let region = ball(&dual, &touching, template.dual_diameter);
            let found = enumerate_embeddings(
                new,
                &dual,
                new_coloring,
                template,
                idx,
                Some(&region),
                Some(&affected),
            );
            kept.extend(found);
            kept.sort_by(|a, b| a.image_facets.cmp(&b.image_facets));
            kept
        })
        .collect();
    Ok(EmbeddingCache { per_template })
}

/// Cuts out the embedded region and glues in the template's other side.
///
/// Interior vertices of the glued region get fresh labels (consecutive,
/// starting just above the host's largest label, in template-label
/// order); their colors are transported through the color permutation the
/// embedding induces. Fails with `StaleEmbedding` when the embedding no
/// longer describes an induced copy in this host.
pub fn apply_flip(
    host: &Complex,
    coloring: &Coloring,
    template: &FlipTemplate,
    embedding: &Embedding,
) -> Result<FlipResult> {
    let host_facet_set: HashSet<&Face> = host.facets().iter().collect();
    if !embedding
        .image_facets
        .iter()
        .all(|f| host_facet_set.contains(f))
        || !image_is_induced(host, &embedding.image_facets)
    {
        return Err(Error::StaleEmbedding);
    }
    let perm = color_permutation(coloring, template, &embedding.vertex_map)
        .ok_or(Error::StaleEmbedding)?;

    let boundary_vs: HashSet<Vertex> = template.boundary.vertex_set().iter().copied().collect();
    let phi_vs: HashSet<Vertex> = template.phi.vertex_set().iter().copied().collect();

    // Fresh labels for the glued interior, in template-label order.
    let mut extended = embedding.vertex_map.clone();
    let mut next = host.fresh_label();
    let mut fresh_vertices = Vec::new();
    for &tv in template.complement.vertex_set() {
        if !phi_vs.contains(&tv) {
            extended.insert(tv, next);
            fresh_vertices.push(next);
            next += 1;
        }
    }

    let removed: HashSet<&Face> = embedding.image_facets.iter().collect();
    let mut facets: Vec<Face> = host
        .facets()
        .iter()
        .filter(|f| !removed.contains(*f))
        .cloned()
        .collect();
    let mut added_facets: Vec<Face> = template
        .complement
        .facets()
        .iter()
        .map(|f| {
            let mut g: Face = f.iter().map(|v| extended[v]).collect();
            g.sort_unstable();
            g
        })
        .collect();
    added_facets.sort_unstable();
    facets.extend(added_facets.iter().cloned());
    let complex = Complex::from_maximal_unchecked(facets);

    // Vertices interior to the removed region leave the complex.
    let removed_vertices: Vec<Vertex> = template
        .phi
        .vertex_set()
        .iter()
        .filter(|tv| !boundary_vs.contains(tv))
        .map(|tv| embedding.vertex_map[tv])
        .sorted_unstable()
        .collect();

    // Fresh labels may reuse labels removed by earlier flips, so the
    // surviving colors must be looked up before the fresh ones land.
    let fresh_set: HashSet<Vertex> = fresh_vertices.iter().copied().collect();
    let mut assignment: BTreeMap<Vertex, usize> = BTreeMap::new();
    for &v in complex.vertex_set() {
        if !fresh_set.contains(&v) {
            if let Some(c) = coloring.color(v) {
                assignment.insert(v, c);
            }
        }
    }
    for (&tv, &hv) in &extended {
        if fresh_set.contains(&hv) {
            assignment.insert(hv, perm[template.color_of(tv)]);
        }
    }
    let new_coloring = Coloring::new(assignment, template.dim + 1);
    debug_assert!(new_coloring.is_proper(&complex));

    Ok(FlipResult {
        complex,
        coloring: new_coloring,
        removed_facets: embedding.image_facets.clone(),
        added_facets,
        fresh_vertices,
        removed_vertices,
    })
}

/// Core enumeration. `allowed` restricts host facet indices (None = all);
/// `require_touch` keeps only images meeting the given vertex set.
fn enumerate_embeddings(
    host: &Complex,
    host_dual: &DualGraph,
    coloring: &Coloring,
    template: &FlipTemplate,
    template_idx: usize,
    allowed: Option<&HashSet<usize>>,
    require_touch: Option<&HashSet<Vertex>>,
) -> Vec<Embedding> {
    let tn = template.phi.n_facets();
    let hn = host.n_facets();
    if tn > hn {
        return Vec::new();
    }
    let mut state = MatchState {
        host,
        host_dual,
        coloring,
        template,
        template_idx,
        allowed,
        require_touch,
        assignment: vec![usize::MAX; tn],
        used: vec![false; hn],
        seen_images: HashSet::new(),
        out: Vec::new(),
    };
    state.descend(0);
    let mut out = state.out;
    out.sort_by(|a, b| a.image_facets.cmp(&b.image_facets));
    out
}

struct MatchState<'a> {
    host: &'a Complex,
    host_dual: &'a DualGraph,
    coloring: &'a Coloring,
    template: &'a FlipTemplate,
    template_idx: usize,
    allowed: Option<&'a HashSet<usize>>,
    require_touch: Option<&'a HashSet<Vertex>>,
    /// Template dual node -> host facet index.
    assignment: Vec<usize>,
    used: Vec<bool>,
    seen_images: HashSet<Vec<Face>>,
    out: Vec<Embedding>,
}

impl MatchState<'_> {
    fn descend(&mut self, pos: usize) {
        let t = self.template;
        if pos == t.bfs_order.len() {
            self.complete();
            return;
        }
        let node = t.bfs_order[pos];
        match t.bfs_parent[pos] {
            None => {
                for h in 0..self.used.len() {
                    if self.candidate_ok(node, h) {
                        self.enter(pos, node, h);
                    }
                }
            }
            Some(parent) => {
                let anchor = self.assignment[parent];
                // Neighbor lists are sorted, keeping enumeration canonical.
                for i in 0..self.host_dual.adjacency[anchor].len() {
                    let h = self.host_dual.adjacency[anchor][i];
                    if self.candidate_ok(node, h) {
                        self.enter(pos, node, h);
                    }
                }
            }
        }
    }

    fn enter(&mut self, pos: usize, node: usize, h: usize) {
        self.assignment[node] = h;
        self.used[h] = true;
        self.descend(pos + 1);
        self.used[h] = false;
        self.assignment[node] = usize::MAX;
    }

    fn candidate_ok(&self, node: usize, h: usize) -> bool {
        if self.used[h] || self.allowed.is_some_and(|a| !a.contains(&h)) {
            return false;
        }
        if self.template.dual_adjacency[node].len() > self.host_dual.degree(h) {
            return false;
        }
        // Every already-matched template neighbor must sit on a host
        // neighbor (monomorphism: template edges map to host edges).
        self.template.dual_adjacency[node].iter().all(|&tn| {
            let hh = self.assignment[tn];
            hh == usize::MAX || self.host_dual.adjacency[h].binary_search(&hh).is_ok()
        })
    }

    fn complete(&mut self) {
        let mut image: Vec<Face> = self
            .assignment
            .iter()
            .map(|&h| self.host.facets()[h].clone())
            .collect();
        image.sort_unstable();
        if self.seen_images.contains(&image) {
            return;
        }
        if let Some(touch) = self.require_touch {
            if !image.iter().flatten().any(|v| touch.contains(v)) {
                return;
            }
        }
        let Some(vertex_map) = self.lift(&image) else {
            return;
        };
        if !image_is_induced(self.host, &image) {
            return;
        }
        if color_permutation(self.coloring, self.template, &vertex_map).is_none() {
            return;
        }
        self.seen_images.insert(image.clone());
        self.out.push(Embedding {
            template_idx: self.template_idx,
            vertex_map,
            image_facets: image,
        });
    }

    /// Lifts the facet assignment to a vertex map, or None when the match
    /// is a dual-graph coincidence with no simplicial realization. The
    /// root facet's bijection is the only freedom; every later vertex is
    /// forced by the ridge shared with its BFS parent.
    fn lift(&self, _image: &[Face]) -> Option<BTreeMap<Vertex, Vertex>> {
        let t = self.template;
        let t_facets = t.phi.facets();
        let root = t.bfs_order[0];
        let root_t = &t_facets[root];
        let root_h = &self.host.facets()[self.assignment[root]];
        for perm in root_h.iter().copied().permutations(root_h.len()) {
            let mut vmap: BTreeMap<Vertex, Vertex> =
                root_t.iter().copied().zip(perm.iter().copied()).collect();
            let mut taken: HashSet<Vertex> = perm.iter().copied().collect();
            let mut ok = true;
            for pos in 1..t.bfs_order.len() {
                let node = t.bfs_order[pos];
                let parent = t.bfs_parent[pos].expect("non-root has a parent");
                let tf = &t_facets[node];
                let pf = &t_facets[parent];
                let hf = &self.host.facets()[self.assignment[node]];
                let hp = &self.host.facets()[self.assignment[parent]];
                let ridge_t = face_intersection(tf, pf);
                let ridge_h = face_intersection(hf, hp);
                if ridge_h.len() != ridge_t.len() {
                    ok = false;
                    break;
                }
                let mapped: Face = ridge_t.iter().map(|v| vmap[v]).sorted_unstable().collect();
                if mapped != ridge_h {
                    ok = false;
                    break;
                }
                let u = *tf.iter().find(|v| !ridge_t.contains(v)).expect("one new vertex");
                let w = *hf.iter().find(|v| !ridge_h.contains(v)).expect("one new vertex");
                match vmap.get(&u) {
                    Some(&x) if x == w => {}
                    Some(_) => {
                        ok = false;
                        break;
                    }
                    None => {
                        if !taken.insert(w) {
                            ok = false;
                            break;
                        }
                        vmap.insert(u, w);
                    }
                }
            }
            if ok {
                return Some(vmap);
            }
        }
        None
    }
}

/// Whether the subcomplex generated by `image_facets` is induced in the
/// host: every host face supported on the image's vertices is an image
/// face. It suffices to check each host facet's intersection with the
/// image vertex set.
fn image_is_induced(host: &Complex, image_facets: &[Face]) -> bool {
    let mut vs: Face = image_facets.iter().flatten().copied().collect();
    vs.sort_unstable();
    vs.dedup();
    let mut image_faces: HashSet<Face> = HashSet::new();
    for f in image_facets {
        for k in 1..=f.len() {
            for sub in f.iter().copied().combinations(k) {
                image_faces.insert(sub);
            }
        }
    }
    host.facets().iter().all(|f| {
        let s = face_intersection(f, &vs);
        s.is_empty() || image_faces.contains(&s)
    })
}

/// The color permutation carrying template colors to host colors, if the
/// embedding respects one (it always does on balanced pseudomanifolds).
fn color_permutation(
    coloring: &Coloring,
    template: &FlipTemplate,
    vertex_map: &BTreeMap<Vertex, Vertex>,
) -> Option<Vec<usize>> {
    let k = template.dim + 1;
    let mut perm = vec![usize::MAX; k];
    for (&tv, &hv) in vertex_map {
        let tc = template.color_of(tv);
        let hc = coloring.color(hv)?;
        if perm[tc] == usize::MAX {
            perm[tc] = hc;
        } else if perm[tc] != hc {
            return None;
        }
    }
    let mut hit = vec![false; k];
    for &p in &perm {
        if p == usize::MAX || p >= k || hit[p] {
            return None;
        }
        hit[p] = true;
    }
    Some(perm)
}

/// Sorted facets of `a` not present in `b` (both canonically sorted).
fn facet_diff(a: &[Face], b: &[Face]) -> Vec<Face> {
    let set: HashSet<&Face> = b.iter().collect();
    a.iter().filter(|f| !set.contains(*f)).cloned().collect()
}

/// Multi-source BFS ball of the given radius in the dual graph.
fn ball(dual: &DualGraph, sources: &[usize], radius: usize) -> HashSet<usize> {
    let mut dist: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &s in sources {
        dist.insert(s, 0);
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        if du == radius {
            continue;
        }
        for &v in &dual.adjacency[u] {
            if let Entry::Vacant(slot) = dist.entry(v) {
                slot.insert(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist.into_keys().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::find_coloring;
    use crate::complex::cross_polytope_boundary;
    use crate::flips::{flip_catalog, FlipKind};

    fn catalog_index(catalog: &[FlipTemplate], phi_facets: usize) -> usize {
        catalog
            .iter()
            .position(|t| t.phi.n_facets() == phi_facets)
            .expect("template with requested size")
    }

    #[test]
    fn single_facet_template_embeds_once_per_facet() {
        let d = 3;
        let host = cross_polytope_boundary(d);
        let coloring = find_coloring(&host).unwrap();
        let catalog = flip_catalog(d);
        let idx = catalog_index(&catalog, 1);
        let found = find_embeddings(&host, &coloring, &catalog[idx], idx).unwrap();
        assert_eq!(found.len(), host.n_facets());
    }

    #[test]
    fn star_template_embeds_once_per_vertex() {
        let d = 3;
        let host = cross_polytope_boundary(d);
        let coloring = find_coloring(&host).unwrap();
        // The closed vertex star is the trivial template, absent from the
        // catalog, but still a legitimate search pattern.
        let template = crate::flips::template_for(&[0], d).unwrap();
        assert_eq!(template.phi.n_facets(), 8);
        let found = find_embeddings(&host, &coloring, &template, 0).unwrap();
        // One embedding per closed vertex star.
        assert_eq!(found.len(), host.n_vertices());
        for e in &found {
            let shared: Face = e
                .image_facets
                .iter()
                .skip(1)
                .fold(e.image_facets[0].clone(), |acc, f| face_intersection(&acc, f));
            assert_eq!(shared.len(), 1, "star facets share exactly the center");
        }
    }

    #[test]
    fn dim_mismatch_is_detected() {
        let host = cross_polytope_boundary(2);
        let coloring = find_coloring(&host).unwrap();
        let catalog = flip_catalog(3);
        assert!(matches!(
            find_embeddings(&host, &coloring, &catalog[0], 0),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn up_flip_on_facet_grows_the_sphere() {
        let d = 3;
        let host = cross_polytope_boundary(d);
        let coloring = find_coloring(&host).unwrap();
        let catalog = flip_catalog(d);
        let idx = catalog_index(&catalog, 1);
        let template = &catalog[idx];
        assert_eq!(template.kind, FlipKind::Up);
        let found = find_embeddings(&host, &coloring, template, idx).unwrap();
        let result = apply_flip(&host, &coloring, template, &found[0]).unwrap();
        assert_eq!(result.complex.f_vector().0, vec![1, 12, 42, 60, 30]);
        assert_eq!(result.fresh_vertices.len(), 4);
        assert!(result.removed_vertices.is_empty());
        assert!(result.complex.is_pseudomanifold());
        assert!(result.coloring.is_proper(&result.complex));
        assert_eq!(result.removed_facets.len(), 1);
        assert_eq!(result.added_facets.len(), 15);
    }

    #[test]
    fn down_flip_undoes_the_up_flip() {
        let d = 2;
        let host = cross_polytope_boundary(d);
        let coloring = find_coloring(&host).unwrap();
        let catalog = flip_catalog(d);
        let up_idx = catalog_index(&catalog, 1);
        let up = find_embeddings(&host, &coloring, &catalog[up_idx], up_idx).unwrap();
        let grown = apply_flip(&host, &coloring, &catalog[up_idx], &up[0]).unwrap();
        // The reverse template takes the grown sphere back to 6 vertices.
        let down_idx = catalog
            .iter()
            .position(|t| t.kind == FlipKind::Down && t.phi.n_facets() == 7)
            .unwrap();
        let down = find_embeddings(
            &grown.complex,
            &grown.coloring,
            &catalog[down_idx],
            down_idx,
        )
        .unwrap();
        assert!(!down.is_empty());
        let back = apply_flip(&grown.complex, &grown.coloring, &catalog[down_idx], &down[0]).unwrap();
        assert_eq!(back.complex.f_vector(), host.f_vector());
        assert!(crate::iso::is_isomorphic(&back.complex, &host).unwrap());
    }

    #[test]
    fn stale_embedding_is_rejected() {
        let d = 2;
        let host = cross_polytope_boundary(d);
        let coloring = find_coloring(&host).unwrap();
        let catalog = flip_catalog(d);
        let idx = catalog_index(&catalog, 1);
        let found = find_embeddings(&host, &coloring, &catalog[idx], idx).unwrap();
        // Flip one facet away, then try to reuse an embedding of a
        // removed facet against the new complex.
        let result = apply_flip(&host, &coloring, &catalog[idx], &found[0]).unwrap();
        let err = apply_flip(&result.complex, &result.coloring, &catalog[idx], &found[0]);
        assert!(matches!(err, Err(Error::StaleEmbedding)));
    }

    #[test]
    fn refresh_matches_full_rescan_after_one_flip() {
        let d = 2;
        let host = cross_polytope_boundary(d);
        let coloring = find_coloring(&host).unwrap();
        let catalog = flip_catalog(d);
        let cache = full_scan(&host, &coloring, &catalog).unwrap();
        let idx = catalog_index(&catalog, 1);
        let result = apply_flip(&host, &coloring, &catalog[idx], &cache.per_template[idx][0]).unwrap();
        let refreshed = refresh_cache(&host, &result.complex, &result.coloring, &catalog, &cache).unwrap();
        let rescanned = full_scan(&result.complex, &result.coloring, &catalog).unwrap();
        assert_eq!(refreshed, rescanned);
    }

    #[test]
    fn interior_edge_detection() {
        let d = 2;
        let host = cross_polytope_boundary(d);
        let coloring = find_coloring(&host).unwrap();
        // The 4-facet star template: its center's edges are interior.
        let template = crate::flips::template_for(&[0], d).unwrap();
        let found = find_embeddings(&host, &coloring, &template, 0).unwrap();
        let e = &found[0];
        let template = &template;
        let center_edges: Vec<Face> = {
            // Image center = vertex in every image facet.
            let center = e
                .image_facets
                .iter()
                .skip(1)
                .fold(e.image_facets[0].clone(), |acc, f| face_intersection(&acc, f));
            let mut vs = e.image_vertices();
            vs.retain(|v| *v != center[0]);
            vs.iter().map(|&v| crate::complex::face([center[0], v])).collect()
        };
        for edge in &center_edges {
            assert!(e.contains_edge_in_interior(template, edge));
        }
        // Boundary edges of the star are spared.
        let boundary_edge = {
            let vs = e.image_vertices();
            let center = face_intersection(&e.image_facets[0], &e.image_facets[1]);
            let mut others: Vec<Vertex> = vs.into_iter().filter(|v| !center.contains(v)).collect();
            others.truncate(2);
            // Find an actual boundary edge among image faces.
            e.image_facets
                .iter()
                .flat_map(|f| f.iter().copied().combinations(2))
                .map(crate::complex::face)
                .find(|edge| !edge.contains(&center[0]))
                .unwrap_or_else(|| crate::complex::face(others))
        };
        assert!(!e.contains_edge_in_interior(template, &boundary_edge));
    }
}
