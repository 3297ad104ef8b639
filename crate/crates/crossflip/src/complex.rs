//! Finite abstract simplicial complexes stored as sorted facet lists.
//!
//! A complex is the downward closure of its facets; we never materialize
//! lower faces unless asked. Vertex labels are opaque `u32`s: operations
//! never assume contiguity, only equality and order. The empty complex
//! `{∅}` (single facet: the empty face) is representable because links of
//! facets produce it; the void complex is not.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A face: strictly increasing vertex list.
pub type Face = Vec<Vertex>;

/// Sorts and dedups a vertex list into a canonical face.
pub fn face(vertices: impl IntoIterator<Item = Vertex>) -> Face {
    let mut f: Vec<Vertex> = vertices.into_iter().collect();
    f.sort_unstable();
    f.dedup();
    f
}

/// True if `a ⊆ b`, both strictly increasing.
pub fn is_subface(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// Intersection of two strictly increasing vertex lists.
pub fn face_intersection(a: &[Vertex], b: &[Vertex]) -> Face {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Set difference `a ∖ b` of two strictly increasing vertex lists.
pub fn face_difference(a: &[Vertex], b: &[Vertex]) -> Face {
    a.iter().filter(|x| !b.contains(x)).copied().collect()
}

/// An abstract simplicial complex, immutable after construction.
///
/// Facets are held sorted by (size, lexicographic); derived data (vertex
/// set, full face lists) is computed lazily and cached, so a `Complex` can
/// be shared freely across threads.
#[derive(Clone)]
pub struct Complex {
    facets: Vec<Face>,
    vertices: OnceLock<Vec<Vertex>>,
    /// `faces[k]` holds the sorted (k-1)-dimensional faces, so index 0 is
    /// the empty face and index d+1 the facets of a pure d-complex.
    faces: OnceLock<Vec<Vec<Face>>>,
    face_set: OnceLock<HashSet<Face>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}
impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex{:?}", self.facets)
    }
}

impl Complex {
    /// Builds a complex from generating faces, reducing them to the
    /// inclusion-maximal ones. An empty generator list is rejected: the
    /// void complex has no meaning here. `[[]]` yields the complex `{∅}`.
    pub fn from_facets(generators: Vec<Vec<Vertex>>) -> Result<Complex> {
        if generators.is_empty() {
            return Err(Error::VoidComplex);
        }
        let mut faces: Vec<Face> = generators.into_iter().map(face).collect();
        // Sorting by descending size lets each face only check larger ones.
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut maximal: Vec<Face> = Vec::with_capacity(faces.len());
        'next: for f in faces {
            for m in &maximal {
                if is_subface(&f, m) {
                    continue 'next;
                }
            }
            maximal.push(f);
        }
        maximal.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(Complex {
            facets: maximal,
            vertices: OnceLock::new(),
            faces: OnceLock::new(),
            face_set: OnceLock::new(),
        })
    }

    /// Like [`Complex::from_facets`] for callers that already guarantee a
    /// clean antichain of equal-sized facets (internal fast path).
    pub(crate) fn from_maximal_unchecked(mut facets: Vec<Face>) -> Complex {
        facets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        Complex {
            facets,
            vertices: OnceLock::new(),
            faces: OnceLock::new(),
            face_set: OnceLock::new(),
        }
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    /// Dimension: largest facet size minus one; `{∅}` has dimension -1.
    pub fn dim(&self) -> isize {
        self.facets.last().map_or(-1, |f| f.len() as isize - 1)
    }

    /// A complex is pure when all facets share the top dimension.
    pub fn is_pure(&self) -> bool {
        match (self.facets.first(), self.facets.last()) {
            (Some(a), Some(b)) => a.len() == b.len(),
            _ => true,
        }
    }

    pub fn ensure_pure(&self) -> Result<()> {
        if self.is_pure() {
            Ok(())
        } else {
            Err(Error::NotPure {
                min: self.facets.first().map_or(-1, |f| f.len() as isize - 1),
                max: self.dim(),
            })
        }
    }

    /// Sorted vertex labels.
    pub fn vertex_set(&self) -> &[Vertex] {
        self.vertices.get_or_init(|| {
            let mut vs: Vec<Vertex> = self.facets.iter().flatten().copied().collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_set().len()
    }

    fn all_faces(&self) -> &Vec<Vec<Face>> {
        self.faces.get_or_init(|| {
            let dim = self.dim();
            let mut by_card: Vec<HashSet<Face>> = vec![HashSet::new(); (dim + 2) as usize];
            by_card[0].insert(Vec::new());
            for facet in &self.facets {
                for (k, bucket) in by_card.iter_mut().enumerate().take(facet.len() + 1).skip(1) {
                    for sub in facet.iter().copied().combinations(k) {
                        bucket.insert(sub);
                    }
                }
            }
            by_card
                .into_iter()
                .map(|set| {
                    let mut v: Vec<Face> = set.into_iter().collect();
                    v.sort_unstable();
                    v
                })
                .collect()
        })
    }

    /// All faces of dimension `k`, sorted; empty slice when out of range.
    pub fn faces_of_dim(&self, k: isize) -> &[Face] {
        let idx = k + 1;
        if idx < 0 {
            return &[];
        }
        self.all_faces()
            .get(idx as usize)
            .map_or(&[], |v| v.as_slice())
    }

    fn face_set(&self) -> &HashSet<Face> {
        self.face_set.get_or_init(|| {
            self.all_faces()
                .iter()
                .flat_map(|v| v.iter().cloned())
                .collect()
        })
    }

    /// Face membership, including the empty face.
    pub fn has_face(&self, f: &[Vertex]) -> bool {
        if f.len() as isize > self.dim() + 1 {
            return false;
        }
        self.face_set().contains(f)
    }

    /// Counts faces per dimension from f_{-1}=1 up to f_d.
    pub fn f_vector(&self) -> FVector {
        FVector(self.all_faces().iter().map(|v| v.len()).collect())
    }

    /// Link of a face: `{G : G ∪ F ∈ Δ, G ∩ F = ∅}`. For a facet this is
    /// the complex `{∅}`.
    pub fn link(&self, f: &[Vertex]) -> Result<Complex> {
        let f = face(f.iter().copied());
        if !self.has_face(&f) {
            return Err(Error::FaceNotPresent(f));
        }
        let generators: Vec<Face> = self
            .facets
            .iter()
            .filter(|facet| is_subface(&f, facet))
            .map(|facet| face_difference(facet, &f))
            .collect();
        Complex::from_facets(generators)
    }

    /// Closed star of a face: all facets containing it, closed downward.
    pub fn star(&self, f: &[Vertex]) -> Result<Complex> {
        let f = face(f.iter().copied());
        if !self.has_face(&f) {
            return Err(Error::FaceNotPresent(f));
        }
        let generators: Vec<Face> = self
            .facets
            .iter()
            .filter(|facet| is_subface(&f, facet))
            .cloned()
            .collect();
        Complex::from_facets(generators)
    }

    /// Join `Δ * Γ`: unions of one face from each side. The operand vertex
    /// sets must be disjoint.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let shared = face_intersection(self.vertex_set(), other.vertex_set());
        if !shared.is_empty() {
            return Err(Error::LabelCollision(shared));
        }
        let mut facets = Vec::with_capacity(self.n_facets() * other.n_facets());
        for a in &self.facets {
            for b in &other.facets {
                let mut f = a.clone();
                f.extend_from_slice(b);
                f.sort_unstable();
                facets.push(f);
            }
        }
        Complex::from_facets(facets)
    }

    /// Barycentric subdivision: one vertex per non-empty face, one facet
    /// per maximal flag of faces. New labels are assigned by the canonical
    /// (size, lexicographic) order of the original faces, starting at 0.
    pub fn barycentric_subdivision(&self) -> Complex {
        let (sd, _) = self.barycentric_subdivision_with_map();
        sd
    }

    /// Subdivision plus the face -> new-label table, for callers that need
    /// to locate the vertex sitting on a particular original face.
    pub fn barycentric_subdivision_with_map(&self) -> (Complex, HashMap<Face, Vertex>) {
        let mut all: Vec<Face> = self
            .all_faces()
            .iter()
            .skip(1) // drop the empty face
            .flat_map(|v| v.iter().cloned())
            .collect();
        all.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let label: HashMap<Face, Vertex> = all
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i as Vertex))
            .collect();
        // Flags inside one facet are its vertex permutations read as
        // nested prefixes; distinct facets never share a maximal flag.
        let mut facets = Vec::new();
        for facet in &self.facets {
            for perm in facet.iter().copied().permutations(facet.len()) {
                let mut chain = Vec::with_capacity(facet.len());
                let mut prefix: Face = Vec::with_capacity(facet.len());
                for v in perm {
                    let pos = prefix.binary_search(&v).unwrap_err();
                    prefix.insert(pos, v);
                    chain.push(label[&prefix]);
                }
                facets.push(chain);
            }
        }
        (
            Complex::from_maximal_unchecked(facets.into_iter().map(face).collect()),
            label,
        )
    }

    /// The subcomplex of all faces supported on `vertices`.
    pub fn induced_subcomplex(&self, vertices: &[Vertex]) -> Complex {
        let vs = face(vertices.iter().copied());
        let generators: Vec<Face> = self
            .facets
            .iter()
            .map(|f| face_intersection(f, &vs))
            .collect();
        Complex::from_maximal_reduce(generators)
    }

    fn from_maximal_reduce(generators: Vec<Face>) -> Complex {
        Complex::from_facets(if generators.is_empty() {
            vec![Vec::new()]
        } else {
            generators
        })
        .expect("non-empty generator list")
    }

    /// Whether `sub` (already a subcomplex of `self`) equals the induced
    /// subcomplex on its own vertex set.
    pub fn is_induced(&self, sub: &Complex) -> bool {
        *sub == self.induced_subcomplex(sub.vertex_set())
    }

    /// Facet-adjacency structure; requires a pure complex.
    pub fn dual_graph(&self) -> Result<DualGraph> {
        self.ensure_pure()?;
        let n = self.n_facets();
        let mut ridge_members: HashMap<Face, Vec<usize>> = HashMap::new();
        for (i, facet) in self.facets.iter().enumerate() {
            if facet.is_empty() {
                continue;
            }
            for k in 0..facet.len() {
                let mut ridge = facet.clone();
                ridge.remove(k);
                ridge_members.entry(ridge).or_default().push(i);
            }
        }
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut max_ridge_degree = 0usize;
        let mut min_ridge_degree = usize::MAX;
        for members in ridge_members.values() {
            max_ridge_degree = max_ridge_degree.max(members.len());
            min_ridge_degree = min_ridge_degree.min(members.len());
            for (a, b) in members.iter().tuple_combinations() {
                adjacency[*a].push(*b);
                adjacency[*b].push(*a);
            }
        }
        if ridge_members.is_empty() {
            min_ridge_degree = 0;
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let connected = components(&adjacency) <= 1;
        Ok(DualGraph {
            adjacency,
            connected,
            every_ridge_in_two: min_ridge_degree == 2 && max_ridge_degree == 2,
            ridge_degree_range: (min_ridge_degree, max_ridge_degree),
        })
    }

    /// Boundary subcomplex of a pure complex: closure of the ridges lying
    /// in exactly one facet. A closed complex has boundary `{∅}`.
    pub fn boundary(&self) -> Result<Complex> {
        self.ensure_pure()?;
        let mut ridge_count: HashMap<Face, usize> = HashMap::new();
        for facet in &self.facets {
            for k in 0..facet.len() {
                let mut ridge = facet.clone();
                ridge.remove(k);
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut boundary_ridges: Vec<Face> = ridge_count
            .into_iter()
            .filter_map(|(ridge, n)| (n == 1).then_some(ridge))
            .collect();
        if boundary_ridges.is_empty() {
            boundary_ridges.push(Vec::new());
        }
        Complex::from_facets(boundary_ridges)
    }

    /// Pure, strongly connected, and every ridge in exactly two facets.
    pub fn is_pseudomanifold(&self) -> bool {
        if !self.is_pure() || self.dim() < 1 {
            return false;
        }
        let dual = self.dual_graph().expect("purity checked");
        dual.connected && dual.every_ridge_in_two
    }

    /// Vertex adjacency map of the 1-skeleton.
    pub fn skeleton_adjacency(&self) -> HashMap<Vertex, Vec<Vertex>> {
        let mut adj: HashMap<Vertex, HashSet<Vertex>> = HashMap::new();
        for f in &self.facets {
            for (i, &u) in f.iter().enumerate() {
                adj.entry(u).or_default();
                for &v in &f[i + 1..] {
                    adj.entry(u).or_default().insert(v);
                    adj.entry(v).or_default().insert(u);
                }
            }
        }
        adj.into_iter()
            .map(|(v, set)| {
                let mut nbrs: Vec<Vertex> = set.into_iter().collect();
                nbrs.sort_unstable();
                (v, nbrs)
            })
            .collect()
    }

    /// Whether the 1-skeleton is connected (vacuously true without
    /// vertices, true for a single vertex).
    pub fn is_connected(&self) -> bool {
        let adjacency = self.skeleton_adjacency();
        let Some(&start) = self.vertex_set().first() else {
            return true;
        };
        let mut seen: HashSet<Vertex> = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &adjacency[&u] {
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen.len() == self.n_vertices()
    }

    /// Smallest label strictly above every vertex in use.
    pub fn fresh_label(&self) -> Vertex {
        self.vertex_set().last().map_or(0, |v| v + 1)
    }
}

fn components(adjacency: &[Vec<usize>]) -> usize {
    let n = adjacency.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// Face counts `(f_{-1}, f_0, ..., f_d)`; entry 0 is always 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `f_k`; zero outside the complex's dimension range.
    pub fn f(&self, k: isize) -> usize {
        let idx = k + 1;
        if idx < 0 {
            0
        } else {
            self.0.get(idx as usize).copied().unwrap_or(0)
        }
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 2
    }

    /// Euler characteristic `Σ (-1)^k f_k` over k ≥ 0.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .skip(1)
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Dual graph: nodes are facet indices (into the canonical facet order),
/// edges join facets sharing a ridge.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub adjacency: Vec<Vec<usize>>,
    /// Whether the graph is connected (strong connectivity of the complex).
    pub connected: bool,
    /// Whether every ridge lies in exactly two facets.
    pub every_ridge_in_two: bool,
    /// (min, max) number of facets per ridge, for diagnostics.
    pub ridge_degree_range: (usize, usize),
}

impl DualGraph {
    pub fn n_nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    /// BFS distances from `start`; `usize::MAX` marks unreachable nodes.
    pub fn distances_from(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n_nodes()];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Longest finite pairwise distance.
    pub fn diameter(&self) -> usize {
        (0..self.n_nodes())
            .flat_map(|s| self.distances_from(s))
            .filter(|&d| d != usize::MAX)
            .max()
            .unwrap_or(0)
    }
}

/// Boundary sphere of the (d+1)-simplex: the smallest triangulated d-sphere.
pub fn standard_sphere(d: usize) -> Complex {
    let n = d as Vertex + 2;
    let facets = (0..n).combinations(d + 1).collect();
    Complex::from_maximal_unchecked(facets)
}

/// Boundary of the (d+1)-dimensional cross-polytope on labels `0..2d+2`,
/// pairing `i` with `d+1+i`: facets pick one vertex from each pair.
pub fn cross_polytope_boundary(d: usize) -> Complex {
    let pairs: Vec<(Vertex, Vertex)> = (0..=d as Vertex)
        .map(|i| (i, d as Vertex + 1 + i))
        .collect();
    cross_polytope_on(&pairs)
}

/// Cross-polytope boundary on explicit antipodal pairs (used by the gluing
/// recipes, which name their copies).
pub fn cross_polytope_on(pairs: &[(Vertex, Vertex)]) -> Complex {
    let mut facets: Vec<Face> = vec![Vec::new()];
    for &(a, b) in pairs {
        facets = facets
            .into_iter()
            .flat_map(|f| {
                let mut fa = f.clone();
                fa.push(a);
                let mut fb = f;
                fb.push(b);
                [fa, fb]
            })
            .collect();
    }
    Complex::from_maximal_unchecked(facets.into_iter().map(face).collect())
}
