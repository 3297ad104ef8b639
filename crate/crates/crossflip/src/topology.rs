//! Verification instruments: homology over GF(2), closed-surface
//! classification, normality, singular-face detection, and shelling-order
//! checking.

use std::collections::{HashMap, HashSet};

use crate::complex::{face_difference, Complex, FVector, Face, Vertex};
use crate::error::{Error, Result};
use crate::iso::is_isomorphic;

/// Betti numbers over the two-element field, unreduced, for dimensions
/// 0 through dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiProfile {
    pub betti: Vec<usize>,
}

impl BettiProfile {
    pub fn b(&self, i: usize) -> usize {
        self.betti.get(i).copied().unwrap_or(0)
    }

    /// Reduced Betti numbers: the same sequence with one unit removed
    /// from dimension 0 (empty on a void profile).
    pub fn reduced(&self) -> Vec<usize> {
        let mut r = self.betti.clone();
        if let Some(b0) = r.first_mut() {
            *b0 = b0.saturating_sub(1);
        }
        r
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl std::fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.betti.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Homology ranks over GF(2) by dense bit-matrix elimination:
/// β_k = dim C_k − rank ∂_k − rank ∂_{k+1}.
pub fn betti_f2(complex: &Complex) -> BettiProfile {
    let d = complex.dim();
    if d < 0 {
        return BettiProfile { betti: Vec::new() };
    }
    let d = d as usize;
    let faces: Vec<&[Face]> = (0..=d).map(|k| complex.faces_of_dim(k as isize)).collect();
    let ranks: Vec<usize> = (1..=d).map(|k| boundary_rank(faces[k - 1], faces[k])).collect();
    let rank_in = |k: usize| if k == 0 { 0 } else { ranks[k - 1] };
    let rank_out = |k: usize| if k == d { 0 } else { ranks[k] };
    let betti = (0..=d)
        .map(|k| faces[k].len() - rank_in(k) - rank_out(k))
        .collect();
    BettiProfile { betti }
}

/// Rank over GF(2) of the boundary map from spans of `high` to spans of
/// `low` (both sorted face lists of consecutive dimensions).
fn boundary_rank(low: &[Face], high: &[Face]) -> usize {
    let words = low.len().div_ceil(64);
    let rows: Vec<Vec<u64>> = high
        .iter()
        .map(|f| {
            let mut row = vec![0u64; words];
            for skip in 0..f.len() {
                let sub: Face = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let idx = low.binary_search(&sub).expect("subface present");
                row[idx / 64] |= 1 << (idx % 64);
            }
            row
        })
        .collect();
    f2_rank(rows)
}

fn f2_rank(rows: Vec<Vec<u64>>) -> usize {
    // pivot bit -> reduced row owning it
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for mut row in rows {
        while let Some(lead) = leading_bit(&row) {
            match pivots.get(&lead) {
                Some(p) => row.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// A classified closed surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceType {
    pub orientable: bool,
    pub euler: i64,
}

impl SurfaceType {
    /// Connected-sum name: S^2, T^{#g}, or (RP^2)^{#k}.
    pub fn name(&self) -> String {
        if self.orientable {
            match (2 - self.euler) / 2 {
                0 => "S^2".to_string(),
                g => format!("T^{{#{g}}}"),
            }
        } else {
            format!("(RP^2)^{{#{}}}", 2 - self.euler)
        }
    }
}

impl std::fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} ({}, euler {})",
            self.name(),
            if self.orientable { "orientable" } else { "non-orientable" },
            self.euler
        )
    }
}

/// Classifies a connected closed 2-pseudomanifold up to homeomorphism.
/// Orientability is decided by propagating a coherent facet orientation
/// across the dual graph; the name follows from it and the Euler
/// characteristic.
pub fn classify_surface(complex: &Complex) -> Result<SurfaceType> {
    let fail = |msg: &str| Err(Error::NotClosedSurface(msg.to_string()));
    if complex.dim() != 2 {
        return fail("dimension is not 2");
    }
    if complex.ensure_pure().is_err() {
        return fail("not pure");
    }
    let dual = complex.dual_graph()?;
    if !dual.every_ridge_in_two {
        return fail("some edge is not in exactly two triangles");
    }
    if !dual.connected {
        return fail("not connected");
    }
    for &v in complex.vertex_set() {
        if !link_is_single_cycle(&complex.link(&[v])?) {
            return fail("some vertex link is not a single cycle");
        }
    }

    // Orient the first triangle arbitrarily; neighbors across an edge
    // must induce opposite orientations on it. A sorted triangle with
    // sign s induces s * (-1)^i on the edge skipping position i.
    let facets = complex.facets();
    let mut sign: Vec<i8> = vec![0; facets.len()];
    sign[0] = 1;
    let mut stack = vec![0usize];
    let mut orientable = true;
    'outer: while let Some(u) = stack.pop() {
        for &w in &dual.adjacency[u] {
            let shared = crate::complex::face_intersection(&facets[u], &facets[w]);
            let iu = facets[u].iter().position(|v| !shared.contains(v)).expect("ridge");
            let iw = facets[w].iter().position(|v| !shared.contains(v)).expect("ridge");
            let parity = |i: usize| if i.is_multiple_of(2) { 1i8 } else { -1 };
            let needed = -sign[u] * parity(iu) * parity(iw);
            if sign[w] == 0 {
                sign[w] = needed;
                stack.push(w);
            } else if sign[w] != needed {
                orientable = false;
                break 'outer;
            }
        }
    }
    Ok(SurfaceType {
        orientable,
        euler: complex.f_vector().euler_characteristic(),
    })
}

fn link_is_single_cycle(link: &Complex) -> bool {
    if link.dim() != 1 {
        return false;
    }
    let adjacency = link.skeleton_adjacency();
    adjacency.values().all(|ns| ns.len() == 2) && link.is_connected()
}

/// Whether the complex is a pseudomanifold whose faces of codimension at
/// least two all have connected links. Returns false (not an error) when
/// the underlying pseudomanifold conditions already fail.
pub fn is_normal_pseudomanifold(complex: &Complex) -> bool {
    if !complex.is_pseudomanifold() {
        return false;
    }
    let d = complex.dim();
    for k in 0..=d - 2 {
        for face in complex.faces_of_dim(k) {
            let link = complex.link(face).expect("face of the complex");
            if !link.is_connected() {
                return false;
            }
        }
    }
    true
}

/// The faces of a pure 2-complex that obstruct being a closed surface.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularityReport {
    /// Edges contained in a number of triangles other than two.
    pub edges: Vec<Face>,
    /// Vertices whose link is not a single cycle.
    pub vertices: Vec<Vertex>,
    /// Vertex count of the subcomplex the singular faces generate.
    pub f0_sing: usize,
}

impl SingularityReport {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty() && self.vertices.is_empty()
    }
}

/// Locates singular edges and vertices of a pure 2-complex.
pub fn singular_faces(complex: &Complex) -> Result<SingularityReport> {
    complex.ensure_pure()?;
    assert_eq!(complex.dim(), 2, "singularity report is for 2-complexes");
    let mut edge_count: HashMap<Face, usize> = HashMap::new();
    for f in complex.facets() {
        for skip in 0..f.len() {
            let e: Face = f
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            *edge_count.entry(e).or_insert(0) += 1;
        }
    }
    let mut edges: Vec<Face> = edge_count
        .into_iter()
        .filter(|(_, n)| *n != 2)
        .map(|(e, _)| e)
        .collect();
    edges.sort_unstable();
    let mut vertices: Vec<Vertex> = complex
        .vertex_set()
        .iter()
        .copied()
        .filter(|&v| !link_is_single_cycle(&complex.link(&[v]).expect("vertex present")))
        .collect();
    vertices.sort_unstable();
    let mut sing_vs: HashSet<Vertex> = vertices.iter().copied().collect();
    for e in &edges {
        sing_vs.extend(e.iter().copied());
    }
    Ok(SingularityReport {
        edges,
        vertices,
        f0_sing: sing_vs.len(),
    })
}

/// The two linear relations a dunce-hat-like contractible 2-complex with
/// triple edges satisfies, on raw counts: f_0 − f_1 + f_2 = 1 and
/// f_0^sing + 2 f_1 − 3 f_2 = 0.
pub fn dunce_relations_hold(f: &FVector, f0_sing: usize) -> bool {
    let (f0, f1, f2) = (f.f(0) as i64, f.f(1) as i64, f.f(2) as i64);
    f0 - f1 + f2 == 1 && f0_sing as i64 + 2 * f1 - 3 * f2 == 0
}

/// Checks the dunce relations on the complex itself.
pub fn dunce_relations(complex: &Complex) -> Result<bool> {
    let report = singular_faces(complex)?;
    Ok(dunce_relations_hold(&complex.f_vector(), report.f0_sing))
}

/// Verifies a shelling order: each facet after the first must meet the
/// span of its predecessors in a nonempty pure (d−1)-complex. That holds
/// iff some ridge of F_i lies in an earlier facet and every intersection
/// F_i ∩ F_j (j < i) is contained in such a ridge.
pub fn verify_shelling(complex: &Complex, order: &[Face]) -> Result<bool> {
    let mut sorted_order: Vec<Face> = order
        .iter()
        .map(|f| {
            let mut g = f.clone();
            g.sort_unstable();
            g
        })
        .collect();
    let given = sorted_order.clone();
    sorted_order.sort_unstable();
    let mut expected = complex.facets().to_vec();
    expected.sort_unstable();
    if sorted_order != expected {
        return Err(Error::BadOrder(
            "order is not a permutation of the facets".to_string(),
        ));
    }

    let mut earlier_ridges: HashSet<Face> = HashSet::new();
    for (i, f) in given.iter().enumerate() {
        if i > 0 {
            let live_ridges: Vec<Face> = ridges_of(f)
                .into_iter()
                .filter(|r| earlier_ridges.contains(r))
                .collect();
            if live_ridges.is_empty() {
                return Ok(false);
            }
            let covered = |g: &Face| {
                face_difference(f, g)
                    .iter()
                    .any(|&x| earlier_ridges.contains(&drop_vertex(f, x)))
            };
            for earlier in &given[..i] {
                let g = crate::complex::face_intersection(f, earlier);
                if g.len() == f.len() || (!g.is_empty() && !covered(&g)) {
                    return Ok(false);
                }
            }
        }
        earlier_ridges.extend(ridges_of(f));
    }
    Ok(true)
}

fn ridges_of(f: &Face) -> Vec<Face> {
    (0..f.len()).map(|skip| {
        f.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect()
    })
    .collect()
}

fn drop_vertex(f: &Face, x: Vertex) -> Face {
    f.iter().copied().filter(|&v| v != x).collect()
}

/// Whether all vertex links are pairwise isomorphic (each is compared to
/// the first; isomorphism is transitive).
pub fn all_vertex_links_isomorphic(complex: &Complex) -> Result<bool> {
    let vs = complex.vertex_set();
    let Some(&first) = vs.first() else {
        return Ok(true);
    };
    let reference = complex.link(&[first])?;
    for &v in &vs[1..] {
        if !is_isomorphic(&reference, &complex.link(&[v])?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope_boundary, face, standard_sphere};

    /// Torus on 9 vertices: vertices (i, j) in the 3x3 grid, labeled
    /// 3i + j, triangles of the standard diagonal subdivision.
    fn torus_9() -> Complex {
        let idx = |i: usize, j: usize| (3 * (i % 3) + j % 3) as Vertex;
        let mut facets = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                facets.push(face([idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)]));
                facets.push(face([idx(i, j), idx(i, j + 1), idx(i + 1, j + 1)]));
            }
        }
        Complex::from_facets(facets).unwrap()
    }

    /// The 6-vertex real projective plane (antipodal quotient of the
    /// icosahedron).
    fn rp2_6() -> Complex {
        let facets = [
            [1, 2, 4], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 5, 6],
            [2, 3, 5], [2, 3, 6], [2, 4, 5], [3, 4, 6], [4, 5, 6],
        ];
        Complex::from_facets(facets.iter().map(|f| face(*f)).collect()).unwrap()
    }

    /// A disk whose boundary 9-gon wraps three times around a triangle:
    /// contractible, with three edges each in three triangles.
    fn triple_wrapped_disk() -> Complex {
        let b = |i: usize| (i % 3) as Vertex;
        let a = |i: usize| 3 + (i % 9) as Vertex;
        let c: Vertex = 12;
        let mut facets = Vec::new();
        for i in 0..9 {
            facets.push(face([c, a(i), a(i + 1)]));
            facets.push(face([b(i), b(i + 1), a(i)]));
            facets.push(face([b(i + 1), a(i), a(i + 1)]));
        }
        Complex::from_facets(facets).unwrap()
    }

    #[test]
    fn betti_of_spheres() {
        assert_eq!(betti_f2(&cross_polytope_boundary(3)).betti, vec![1, 0, 0, 1]);
        assert_eq!(betti_f2(&standard_sphere(2)).betti, vec![1, 0, 1]);
        assert_eq!(betti_f2(&standard_sphere(1)).betti, vec![1, 1]);
    }

    #[test]
    fn betti_of_torus_and_projective_plane() {
        assert_eq!(betti_f2(&torus_9()).betti, vec![1, 2, 1]);
        assert_eq!(betti_f2(&rp2_6()).betti, vec![1, 1, 1]);
    }

    #[test]
    fn euler_betti_consistency() {
        for c in [
            cross_polytope_boundary(2),
            cross_polytope_boundary(3),
            torus_9(),
            rp2_6(),
            triple_wrapped_disk(),
        ] {
            let b = betti_f2(&c);
            assert_eq!(b.euler_characteristic(), c.f_vector().euler_characteristic());
        }
    }

    #[test]
    fn reduced_profile_drops_one_component() {
        let b = betti_f2(&cross_polytope_boundary(3));
        assert_eq!(b.reduced(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn classify_known_surfaces() {
        let s2 = classify_surface(&cross_polytope_boundary(2)).unwrap();
        assert_eq!(s2, SurfaceType { orientable: true, euler: 2 });
        assert_eq!(s2.name(), "S^2");

        let t2 = classify_surface(&torus_9()).unwrap();
        assert_eq!(t2, SurfaceType { orientable: true, euler: 0 });
        assert_eq!(t2.name(), "T^{#1}");

        let rp2 = classify_surface(&rp2_6()).unwrap();
        assert_eq!(rp2, SurfaceType { orientable: false, euler: 1 });
        assert_eq!(rp2.name(), "(RP^2)^{#1}");
    }

    #[test]
    fn classification_agrees_with_homology() {
        for c in [cross_polytope_boundary(2), torus_9(), rp2_6()] {
            let surface = classify_surface(&c).unwrap();
            let betti = betti_f2(&c);
            // Over GF(2) every closed surface has a top class and
            // beta_1 = 2 - euler; orientability needs the propagation.
            assert_eq!(betti.b(2), 1);
            assert_eq!(betti.b(1) as i64, 2 - surface.euler);
            assert_eq!(betti.euler_characteristic(), surface.euler);
        }
    }

    #[test]
    fn open_or_singular_complexes_are_rejected() {
        let disk = Complex::from_facets(vec![face([0, 1, 2])]).unwrap();
        assert!(matches!(
            classify_surface(&disk),
            Err(Error::NotClosedSurface(_))
        ));
        assert!(matches!(
            classify_surface(&cross_polytope_boundary(3)),
            Err(Error::NotClosedSurface(_))
        ));
        assert!(matches!(
            classify_surface(&triple_wrapped_disk()),
            Err(Error::NotClosedSurface(_))
        ));
    }

    #[test]
    fn normality_of_manifolds_and_wedges() {
        assert!(is_normal_pseudomanifold(&cross_polytope_boundary(3)));
        assert!(is_normal_pseudomanifold(&torus_9()));
        // Two 2-spheres sharing one vertex: the shared link is two
        // disjoint cycles, and the dual graph splits.
        let mut facets = standard_sphere(2).facets().to_vec();
        facets.extend(standard_sphere(2).facets().iter().map(|f| {
            face(f.iter().map(|&v| if v == 0 { 0 } else { v + 10 }))
        }));
        let wedge = Complex::from_facets(facets).unwrap();
        assert!(!is_normal_pseudomanifold(&wedge));
    }

    #[test]
    fn suspension_of_projective_plane_is_normal_but_not_a_manifold() {
        let rp2 = rp2_6();
        let apexes = Complex::from_facets(vec![vec![100], vec![101]]).unwrap();
        let susp = rp2.join(&apexes).unwrap();
        assert!(is_normal_pseudomanifold(&susp));
        // The apex link is the projective plane itself, not a sphere.
        let apex_link = susp.link(&[100]).unwrap();
        assert_eq!(betti_f2(&apex_link).betti, vec![1, 1, 1]);
    }

    #[test]
    fn singularity_report_on_the_wrapped_disk() {
        let c = triple_wrapped_disk();
        assert_eq!(c.f_vector().0, vec![1, 13, 39, 27]);
        let report = singular_faces(&c).unwrap();
        assert_eq!(report.edges, vec![face([0, 1]), face([0, 2]), face([1, 2])]);
        assert_eq!(report.vertices, vec![0, 1, 2]);
        assert_eq!(report.f0_sing, 3);
        assert!(dunce_relations(&c).unwrap());
    }

    #[test]
    fn dunce_relations_fail_on_surfaces_and_disks() {
        assert!(!dunce_relations(&cross_polytope_boundary(2)).unwrap());
        let disk = Complex::from_facets(vec![face([0, 1, 2])]).unwrap();
        assert!(!dunce_relations(&disk).unwrap());
    }

    #[test]
    fn dunce_relations_on_raw_counts() {
        // An 11-vertex contractible complex with a 4-vertex singularity
        // satisfies both relations.
        assert!(dunce_relations_hold(&FVector(vec![1, 11, 34, 24]), 4));
        assert!(!dunce_relations_hold(&FVector(vec![1, 11, 34, 24]), 5));
        assert!(!dunce_relations_hold(&FVector(vec![1, 4, 6, 4]), 0));
    }

    /// Brute-force shelling predicate: materialize the intersection of
    /// face sets and inspect its maximal elements.
    fn shelling_oracle(order: &[Face]) -> bool {
        let d = order[0].len() - 1;
        let mut earlier: HashSet<Face> = HashSet::new();
        for (i, f) in order.iter().enumerate() {
            let subsets: Vec<Face> = (1..=f.len())
                .flat_map(|k| {
                    use itertools::Itertools;
                    f.iter().copied().combinations(k).collect::<Vec<_>>()
                })
                .collect();
            if i > 0 {
                let inter: Vec<&Face> =
                    subsets.iter().filter(|s| earlier.contains(*s)).collect();
                if inter.is_empty() {
                    return false;
                }
                let maximal: Vec<&&Face> = inter
                    .iter()
                    .filter(|s| {
                        !inter.iter().any(|t| {
                            t.len() > s.len() && s.iter().all(|v| t.contains(v))
                        })
                    })
                    .collect();
                if !maximal.iter().all(|s| s.len() == d) {
                    return false;
                }
            }
            earlier.extend(subsets);
        }
        true
    }

    #[test]
    fn shelling_of_simplex_boundary_any_order() {
        use itertools::Itertools;
        let c = standard_sphere(2);
        for perm in c.facets().iter().cloned().permutations(c.n_facets()) {
            let got = verify_shelling(&c, &perm).unwrap();
            assert_eq!(got, shelling_oracle(&perm));
            assert!(got, "every facet order of a simplex boundary shells");
        }
    }

    #[test]
    fn shelling_rejects_disconnected_prefixes() {
        // An octahedron order that starts with two opposite triangles.
        let c = cross_polytope_boundary(2);
        let facets = c.facets().to_vec();
        let far = facets
            .iter()
            .position(|f| crate::complex::face_intersection(f, &facets[0]).is_empty())
            .expect("octahedron has disjoint triangle pairs");
        let mut order = facets.clone();
        order.swap(1, far);
        assert!(!verify_shelling(&c, &order).unwrap());
        assert!(!shelling_oracle(&order));
        // The sorted order itself does shell.
        assert!(verify_shelling(&c, &facets).unwrap());
        assert!(shelling_oracle(&facets));
    }

    #[test]
    fn shelling_matches_oracle_on_random_orders() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for c in [cross_polytope_boundary(2), torus_9(), rp2_6()] {
            for _ in 0..40 {
                let mut order = c.facets().to_vec();
                order.shuffle(&mut rng);
                assert_eq!(verify_shelling(&c, &order).unwrap(), shelling_oracle(&order));
            }
        }
    }

    #[test]
    fn single_facet_shells_and_bad_orders_error() {
        let single = Complex::from_facets(vec![face([0, 1, 2, 3])]).unwrap();
        assert!(verify_shelling(&single, single.facets()).unwrap());
        let c = standard_sphere(2);
        let mut missing = c.facets().to_vec();
        missing.pop();
        assert!(matches!(
            verify_shelling(&c, &missing),
            Err(Error::BadOrder(_))
        ));
        let mut doubled = c.facets().to_vec();
        doubled[0] = doubled[1].clone();
        assert!(matches!(
            verify_shelling(&c, &doubled),
            Err(Error::BadOrder(_))
        ));
    }

    #[test]
    fn link_isomorphism_census() {
        assert!(all_vertex_links_isomorphic(&cross_polytope_boundary(3)).unwrap());
        assert!(all_vertex_links_isomorphic(&torus_9()).unwrap());
        // A stacked sphere mixes degree-3 apexes with higher degrees.
        let mut facets = standard_sphere(2).facets().to_vec();
        facets.retain(|f| *f != face([0, 1, 2]));
        facets.extend([face([0, 1, 9]), face([0, 2, 9]), face([1, 2, 9])]);
        let stacked = Complex::from_facets(facets).unwrap();
        assert!(!all_vertex_links_isomorphic(&stacked).unwrap());
    }

    #[test]
    fn normality_descends_to_links() {
        let c = cross_polytope_boundary(3);
        assert!(is_normal_pseudomanifold(&c));
        for &v in c.vertex_set() {
            assert!(is_normal_pseudomanifold(&c.link(&[v]).unwrap()));
        }
    }
}
