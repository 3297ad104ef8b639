//! Building balanced complexes: connected sums, balanced handle
//! additions, cross-polytopal stacked spheres, the two explicit S^2
//! bundle doubles, suspension towers, and the lower-bound equality gap.

use std::collections::{BTreeMap, HashSet};

use crate::balance::Coloring;
use crate::complex::{cross_polytope_on, face_intersection, Complex, Face, Vertex};
use crate::error::{Error, Result};

/// A vertex identification between two facets: `map` sends each vertex
/// of the source facet to the vertex of the target facet it merges with.
/// Target labels survive the identification.
#[derive(Clone, Debug)]
pub struct Gluing {
    pub source: Face,
    pub target: Face,
    map: BTreeMap<Vertex, Vertex>,
}

impl Gluing {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let map: BTreeMap<Vertex, Vertex> = pairs.into_iter().collect();
        let mut target: Face = map.values().copied().collect();
        target.sort_unstable();
        if target.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadGluing("identification is not injective".into()));
        }
        let source: Face = map.keys().copied().collect();
        Ok(Gluing { source, target, map })
    }

    /// Matches the vertices of two rainbow facets color by color.
    pub fn matching_colors(
        f: &Face,
        g: &Face,
        source_colors: &Coloring,
        target_colors: &Coloring,
    ) -> Result<Self> {
        let by_color: BTreeMap<usize, Vertex> = g
            .iter()
            .filter_map(|&w| target_colors.color(w).map(|c| (c, w)))
            .collect();
        let pairs: Option<Vec<(Vertex, Vertex)>> = f
            .iter()
            .map(|&v| {
                let c = source_colors.color(v)?;
                by_color.get(&c).map(|&w| (v, w))
            })
            .collect();
        match pairs {
            Some(p) if p.len() == f.len() && f.len() == g.len() => Self::from_pairs(p),
            _ => Err(Error::ColorMismatch(
                "facets do not use matching color sets".into(),
            )),
        }
    }

    pub fn map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.map
    }

    fn rename(&self, f: &Face) -> Face {
        let mut g: Face = f
            .iter()
            .map(|v| self.map.get(v).copied().unwrap_or(*v))
            .collect();
        g.sort_unstable();
        g
    }
}

/// The connected sum: delete the glued facets from both complexes and
/// identify their vertices through the gluing. When colorings are given,
/// the identification must preserve colors, and then the sum is balanced
/// whenever the inputs are.
pub fn connected_sum(
    a: &Complex,
    b: &Complex,
    gluing: &Gluing,
    colorings: Option<(&Coloring, &Coloring)>,
) -> Result<Complex> {
    if a.vertex_set().iter().any(|v| b.vertex_set().binary_search(v).is_ok()) {
        return Err(Error::BadGluing("summands share vertex labels".into()));
    }
    if !a.facets().contains(&gluing.source) {
        return Err(Error::BadGluing("source facet is not a facet".into()));
    }
    if !b.facets().contains(&gluing.target) {
        return Err(Error::BadGluing("target facet is not a facet".into()));
    }
    if let Some((ka, kb)) = colorings {
        ensure_color_compatible(gluing, ka, kb)?;
    }
    let facets: Vec<Face> = a
        .facets()
        .iter()
        .filter(|f| **f != gluing.source)
        .map(|f| gluing.rename(f))
        .chain(b.facets().iter().filter(|f| **f != gluing.target).cloned())
        .collect();
    Ok(Complex::from_maximal_unchecked(facets))
}

/// Balanced handle addition: delete two disjoint facets of one complex
/// and identify them. Requires disjoint links vertex-wise (so the result
/// is a complex and homology-manifoldness is preserved) and, with a
/// coloring, color compatibility. `require_even_distance` additionally
/// demands an even dual-graph distance between the two facets.
pub fn handle_addition(
    complex: &Complex,
    gluing: &Gluing,
    coloring: Option<&Coloring>,
    require_even_distance: bool,
) -> Result<Complex> {
    let facets = complex.facets();
    let source_idx = facets.iter().position(|f| *f == gluing.source);
    let target_idx = facets.iter().position(|f| *f == gluing.target);
    let (Some(source_idx), Some(target_idx)) = (source_idx, target_idx) else {
        return Err(Error::BadGluing("gluing faces are not facets".into()));
    };
    if !face_intersection(&gluing.source, &gluing.target).is_empty() {
        return Err(Error::BadGluing("handle facets must be disjoint".into()));
    }
    for (&v, &w) in &gluing.map {
        let lv = complex.link(&[v])?;
        let lw = complex.link(&[w])?;
        let lv_set: HashSet<Vertex> = lv.vertex_set().iter().copied().collect();
        if lw.vertex_set().iter().any(|u| lv_set.contains(u)) {
            return Err(Error::BadGluing(format!(
                "links of {v} and {w} intersect"
            )));
        }
    }
    if let Some(k) = coloring {
        ensure_color_compatible(gluing, k, k)?;
    }
    if require_even_distance {
        let dual = complex.dual_graph()?;
        let dist = dual.distances_from(source_idx)[target_idx];
        if dist % 2 != 0 {
            return Err(Error::BadGluing(format!(
                "dual distance {dist} between handle facets is odd"
            )));
        }
    }
    let facets: Vec<Face> = facets
        .iter()
        .filter(|f| **f != gluing.source && **f != gluing.target)
        .map(|f| gluing.rename(f))
        .collect();
    Ok(Complex::from_maximal_unchecked(facets))
}

fn ensure_color_compatible(gluing: &Gluing, ka: &Coloring, kb: &Coloring) -> Result<()> {
    for (&v, &w) in &gluing.map {
        let cv = ka.color(v);
        let cw = kb.color(w);
        if cv.is_none() || cv != cw {
            return Err(Error::ColorMismatch(format!(
                "identified vertices {v} and {w} have different colors"
            )));
        }
    }
    Ok(())
}

/// Iterated connected sum of `copies` cross-polytope boundaries, glued
/// deterministically and color-compatibly. One copy is ∂C_{d+1} itself.
pub fn stacked_cross_polytopal_sphere(d: usize, copies: usize) -> (Complex, Coloring) {
    assert!(copies >= 1, "at least one copy");
    let canonical = |base: Vertex| -> (Complex, Coloring) {
        let pairs: Vec<(Vertex, Vertex)> = (0..=d as Vertex)
            .map(|i| (base + i, base + d as Vertex + 1 + i))
            .collect();
        let complex = cross_polytope_on(&pairs);
        let assignment = complex
            .vertex_set()
            .iter()
            .map(|&v| (v, ((v - base) as usize) % (d + 1)))
            .collect();
        (complex, Coloring::new(assignment, d + 1))
    };
    let (mut current, mut coloring) = canonical(0);
    for _ in 1..copies {
        let (copy, copy_colors) = canonical(current.fresh_label());
        let target = current.facets().last().expect("non-void").clone();
        let source = copy.facets()[0].clone();
        let gluing = Gluing::matching_colors(&source, &target, &copy_colors, &coloring)
            .expect("rainbow facets");
        let glued_away: HashSet<Vertex> = source.iter().copied().collect();
        let summed = connected_sum(&copy, &current, &gluing, Some((&copy_colors, &coloring)))
            .expect("fresh labels and matching colors");
        let mut assignment: BTreeMap<Vertex, usize> = coloring.iter().collect();
        for (v, c) in copy_colors.iter() {
            if !glued_away.contains(&v) {
                assignment.insert(v, c);
            }
        }
        current = summed;
        coloring = Coloring::new(assignment, d + 1);
    }
    (current, coloring)
}

/// Binomial coefficient, small arguments.
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The slack in the balanced lower bound for d-manifolds:
/// 2 f_1 − 3 d f_0 − 4 C(d+1,2) (β̃_1 − 1). Zero means equality; members
/// of the balanced Walkup class attain it.
pub fn walkup_equality_gap(complex: &Complex, reduced_beta_1: usize) -> i64 {
    let f = complex.f_vector();
    let d = complex.dim().max(0) as usize;
    2 * f.f(1) as i64
        - 3 * (d as i64) * f.f(0) as i64
        - 4 * binom(d + 1, 2) as i64 * (reduced_beta_1 as i64 - 1)
}

/// k-fold suspension with fresh apex pairs; each step raises the
/// dimension by one and the vertex count by two, and preserves
/// balancedness (the apexes form a new color class).
pub fn suspension_tower(complex: &Complex, k: usize) -> Complex {
    let mut current = complex.clone();
    for _ in 0..k {
        let a = current.fresh_label();
        let poles = Complex::from_facets(vec![vec![a], vec![a + 1]]).expect("two poles");
        current = current.join(&poles).expect("fresh labels");
    }
    current
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleKind {
    /// The non-orientable (twisted) S^2 bundle double.
    Twisted,
    /// The orientable S^2 x S^1 double.
    Orientable,
}

/// A constructed complex together with its coloring and a readable name
/// for each vertex label.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub complex: Complex,
    pub coloring: Coloring,
    pub names: BTreeMap<Vertex, String>,
}

/// Cross-polytope boundary on two named vertex quadruples with pairs
/// (first[i], second[i]), colored by index.
fn octahedral_block(first: Vertex, second: Vertex) -> (Complex, Coloring) {
    let pairs: Vec<(Vertex, Vertex)> = (0..4).map(|i| (first + i, second + i)).collect();
    let complex = cross_polytope_on(&pairs);
    let assignment = complex
        .vertex_set()
        .iter()
        .map(|&v| (v, (v % 4) as usize))
        .collect();
    (complex, Coloring::new(assignment, 4))
}

fn index_gluing(source: Vertex, targets: &[Vertex; 4]) -> Gluing {
    Gluing::from_pairs((0..4).map(|i| (source + i, targets[i as usize]))).expect("bijection")
}

fn named_quad(names: &mut BTreeMap<Vertex, String>, base: Vertex, stem: &str) {
    for i in 0..4 {
        names.insert(base + i, format!("{stem}{}", i + 1));
    }
}

/// The 12-vertex twisted S^2 bundle: three cross-polytope boundaries
/// chained by two connected sums, closed up by one handle addition.
/// Labels: x = 0..4, y = 8..12, z = 16..20 (all colored label mod 4).
pub fn twisted_bundle_12() -> Assembly {
    let (ka, ca) = octahedral_block(0, 4); // x, y'
    let (kb, cb) = octahedral_block(8, 12); // y, z'
    let (kc, cc) = octahedral_block(16, 20); // z, x'

    let sum1 = connected_sum(&ka, &kb, &index_gluing(4, &[8, 9, 10, 11]), Some((&ca, &cb)))
        .expect("y' onto y");
    let coloring12 = Coloring::new(
        sum1.vertex_set().iter().map(|&v| (v, (v % 4) as usize)).collect(),
        4,
    );
    let sum2 = connected_sum(
        &sum1,
        &kc,
        &index_gluing(12, &[16, 17, 18, 19]),
        Some((&coloring12, &cc)),
    )
    .expect("z' onto z");
    let coloring16 = Coloring::new(
        sum2.vertex_set().iter().map(|&v| (v, (v % 4) as usize)).collect(),
        4,
    );
    let complex = handle_addition(
        &sum2,
        &index_gluing(20, &[0, 1, 2, 3]),
        Some(&coloring16),
        false,
    )
    .expect("x' onto x closes the handle");
    let coloring = Coloring::new(
        complex.vertex_set().iter().map(|&v| (v, (v % 4) as usize)).collect(),
        4,
    );
    let mut names = BTreeMap::new();
    named_quad(&mut names, 0, "x");
    named_quad(&mut names, 8, "y");
    named_quad(&mut names, 16, "z");
    Assembly { complex, coloring, names }
}

/// The 16-vertex orientable S^2 x S^1: four cross-polytope boundaries,
/// three connected sums, one handle addition. Labels: x = 0..4,
/// y = 8..12, z = 12..16, w = 16..20.
pub fn orientable_bundle_16() -> Assembly {
    let (k1, c1) = octahedral_block(0, 4); // x, y'
    let (k2, c2) = octahedral_block(8, 12); // y, z
    let (k3, c3) = octahedral_block(16, 20); // w, (x''_1, y''_2, y''_3, y''_4)
    let (k4, c4) = octahedral_block(24, 28); // w', (y''_1, z''_2, z''_3, z''_4)

    let mod4_coloring = |c: &Complex| {
        Coloring::new(c.vertex_set().iter().map(|&v| (v, (v % 4) as usize)).collect(), 4)
    };

    let sum1 = connected_sum(&k1, &k2, &index_gluing(4, &[8, 9, 10, 11]), Some((&c1, &c2)))
        .expect("y' onto y");
    let ks1 = mod4_coloring(&sum1);
    // x''_1 -> x_1 and y''_i -> y_i glue the third block along a mixed
    // facet of the first.
    let sum2 = connected_sum(&k3, &sum1, &index_gluing(20, &[0, 9, 10, 11]), Some((&c3, &ks1)))
        .expect("(x''_1, y''_2..4) onto (x_1, y_2..4)");
    let ks2 = mod4_coloring(&sum2);
    let sum3 = connected_sum(&k4, &sum2, &index_gluing(28, &[8, 13, 14, 15]), Some((&c4, &ks2)))
        .expect("(y''_1, z''_2..4) onto (y_1, z_2..4)");
    let ks3 = mod4_coloring(&sum3);
    let complex = handle_addition(
        &sum3,
        &index_gluing(24, &[16, 17, 18, 19]),
        Some(&ks3),
        false,
    )
    .expect("w' onto w closes the handle");
    let coloring = mod4_coloring(&complex);
    let mut names = BTreeMap::new();
    named_quad(&mut names, 0, "x");
    named_quad(&mut names, 8, "y");
    named_quad(&mut names, 12, "z");
    named_quad(&mut names, 16, "w");
    Assembly { complex, coloring, names }
}

/// A balanced triangulation of the double of the chosen S^2 bundle over
/// S^1 on 16 vertices, following the explicit Walkup-class recipes: grow
/// the base bundle by two connected sums with fresh cross-polytope
/// boundaries, then close the second handle between facets at even dual
/// distance in the base.
pub fn build_bundle_double(kind: BundleKind) -> Assembly {
    match kind {
        BundleKind::Twisted => double_of_twisted(),
        BundleKind::Orientable => double_of_orientable(),
    }
}

fn double_of_twisted() -> Assembly {
    let base = twisted_bundle_12();
    let dual = base.complex.dual_graph().expect("closed manifold");
    // F: first facet; G: first facet disjoint from F at even dual
    // distance, measured in the base as the recipe demands.
    let facets = base.complex.facets();
    let f = facets[0].clone();
    let dist = dual.distances_from(0);
    let g = facets
        .iter()
        .enumerate()
        .find(|(i, cand)| {
            face_intersection(&f, cand).is_empty() && dist[*i].is_multiple_of(2)
        })
        .map(|(_, cand)| cand.clone())
        .expect("the 12-vertex bundle has an even-distance disjoint facet pair");

    let mod4 = |c: &Complex| {
        Coloring::new(c.vertex_set().iter().map(|&v| (v, (v % 4) as usize)).collect(), 4)
    };
    let by_color = |base_vertex: Vertex, facet: &Face| -> Gluing {
        // base_vertex + c has color c; pair it with facet's color-c vertex.
        let mut targets = [0; 4];
        for &w in facet {
            targets[(w % 4) as usize] = w;
        }
        index_gluing(base_vertex, &targets)
    };

    // Sum ∂C_4(s, r') over F (r' -> r), then ∂C_4(t, s') over s
    // (s' -> s), then the handle t -> G.
    let (ks, cs) = octahedral_block(24, 28); // s, r'
    let sum1 = connected_sum(&ks, &base.complex, &by_color(28, &f), Some((&cs, &base.coloring)))
        .expect("r' onto F");
    let ksum1 = mod4(&sum1);
    let (kt, ct) = octahedral_block(32, 36); // t, s'
    let sum2 = connected_sum(&kt, &sum1, &index_gluing(36, &[24, 25, 26, 27]), Some((&ct, &ksum1)))
        .expect("s' onto s");
    let ksum2 = mod4(&sum2);
    let complex = handle_addition(&sum2, &by_color(32, &g), Some(&ksum2), false)
        .expect("t onto G closes the second handle");
    let coloring = mod4(&complex);
    let mut names = base.names;
    named_quad(&mut names, 24, "s");
    Assembly { complex, coloring, names }
}

fn double_of_orientable() -> Assembly {
    let base = orientable_bundle_16();
    let f: Face = vec![0, 1, 2, 3]; // x_1..x_4
    let g: Face = vec![13, 14, 15, 16]; // z_2, z_3, z_4, w_1
    debug_assert!(base.complex.facets().contains(&f));
    debug_assert!(base.complex.facets().contains(&g));

    let mod4 = |c: &Complex| {
        Coloring::new(c.vertex_set().iter().map(|&v| (v, (v % 4) as usize)).collect(), 4)
    };
    let (k5, c5) = octahedral_block(32, 36); // x''', (w'''_1, z'''_2, z'''_3, z'''_4)
    let sum = connected_sum(&k5, &base.complex, &index_gluing(32, &[0, 1, 2, 3]), Some((&c5, &base.coloring)))
        .expect("x''' onto x");
    let ksum = mod4(&sum);
    let complex = handle_addition(
        &sum,
        &index_gluing(36, &[16, 13, 14, 15]),
        Some(&ksum),
        false,
    )
    .expect("(w'''_1, z'''_2..4) onto G closes the second handle");
    let coloring = mod4(&complex);
    Assembly { complex, coloring, names: base.names }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::find_coloring;
    use crate::complex::{cross_polytope_boundary, face, standard_sphere};
    use crate::iso::is_isomorphic;
    use crate::topology::{betti_f2, is_normal_pseudomanifold};

    fn canonical_coloring(d: usize, c: &Complex) -> Coloring {
        Coloring::new(
            c.vertex_set().iter().map(|&v| (v, (v as usize) % (d + 1))).collect(),
            d + 1,
        )
    }

    #[test]
    fn sum_of_two_cross_polytopes() {
        let (c, coloring) = stacked_cross_polytopal_sphere(3, 2);
        assert_eq!(c.f_vector().0, vec![1, 12, 42, 60, 30]);
        assert!(coloring.is_proper(&c));
        assert!(c.is_pseudomanifold());
        assert_eq!(betti_f2(&c).betti, vec![1, 0, 0, 1]);
    }

    #[test]
    fn sum_f_vector_formula() {
        for d in 1..=3usize {
            for copies in 2..=4usize {
                let (c, _) = stacked_cross_polytopal_sphere(d, copies);
                let single = cross_polytope_boundary(d).f_vector();
                let k = copies;
                for i in 0..d {
                    assert_eq!(
                        c.f_vector().f(i as isize),
                        k * single.f(i as isize) - (k - 1) * binom(d + 1, i + 1)
                    );
                }
                assert_eq!(c.f_vector().f(d as isize), k * (1 << (d + 1)) - 2 * (k - 1));
            }
        }
    }

    #[test]
    fn simplex_boundary_sums_are_stacked_spheres() {
        let d = 2;
        let a = standard_sphere(d);
        let b = Complex::from_facets(
            standard_sphere(d)
                .facets()
                .iter()
                .map(|f| face(f.iter().map(|v| v + 10)))
                .collect(),
        )
        .unwrap();
        let gluing = Gluing::from_pairs([(0, 10), (1, 11), (2, 12)]).unwrap();
        let sum = connected_sum(&a, &b, &gluing, None).unwrap();
        assert_eq!(sum.f_vector().f(0), d + 3);
        assert!(sum.is_pseudomanifold());
    }

    #[test]
    fn sum_rejects_bad_inputs() {
        let a = cross_polytope_boundary(2);
        let b = cross_polytope_boundary(2);
        let gluing = Gluing::from_pairs([(0, 0), (1, 1), (2, 2)]).unwrap();
        assert!(matches!(
            connected_sum(&a, &b, &gluing, None),
            Err(Error::BadGluing(_))
        ));
        assert!(Gluing::from_pairs([(0, 5), (1, 5), (2, 6)]).is_err());

        let b = Complex::from_facets(
            b.facets().iter().map(|f| face(f.iter().map(|v| v + 10))).collect(),
        )
        .unwrap();
        let not_a_facet = Gluing::from_pairs([(0, 10), (1, 11), (4, 12)]).unwrap();
        assert!(matches!(
            connected_sum(&a, &b, &not_a_facet, None),
            Err(Error::BadGluing(_))
        ));

        // Crossed pairing: 0 and 11 land in different color classes.
        let ka = canonical_coloring(2, &a);
        let kb = canonical_coloring(2, &Complex::from_facets(
            b.facets().iter().map(|f| face(f.iter().map(|v| v - 10))).collect(),
        ).unwrap());
        let kb = Coloring::new(kb.iter().map(|(v, c)| (v + 10, c)).collect(), 3);
        let crossed = Gluing::from_pairs([(0, 11), (1, 10), (2, 12)]).unwrap();
        assert!(matches!(
            connected_sum(&a, &b, &crossed, Some((&ka, &kb))),
            Err(Error::ColorMismatch(_))
        ));
    }

    #[test]
    fn handle_on_minimal_sphere_is_rejected() {
        // Antipodal facets of ∂C_4 still have identical link vertex sets.
        let c = cross_polytope_boundary(3);
        let gluing = Gluing::from_pairs([(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        assert!(matches!(
            handle_addition(&c, &gluing, None, false),
            Err(Error::BadGluing(_))
        ));
    }

    #[test]
    fn twisted_bundle_has_the_known_f_vector() {
        let bundle = twisted_bundle_12();
        assert_eq!(bundle.complex.f_vector().0, vec![1, 12, 54, 84, 42]);
        assert!(bundle.coloring.is_proper(&bundle.complex));
        assert!(bundle.complex.is_pseudomanifold());
        assert!(is_normal_pseudomanifold(&bundle.complex));
        assert_eq!(betti_f2(&bundle.complex).betti, vec![1, 1, 1, 1]);
        assert_eq!(bundle.names.len(), 12);
    }

    #[test]
    fn handle_raises_first_betti_by_one() {
        // The chain of three sums is a sphere; its handle closure is the
        // twisted bundle.
        let (chain, coloring) = stacked_cross_polytopal_sphere(3, 3);
        assert_eq!(betti_f2(&chain).reduced()[1], 0);
        let bundle = twisted_bundle_12();
        assert_eq!(betti_f2(&bundle.complex).reduced()[1], 1);
        // Independence from the fixture: one more handle on the double.
        let _ = (chain, coloring);
    }

    #[test]
    fn orientable_bundle_16_shape() {
        let bundle = orientable_bundle_16();
        assert_eq!(bundle.complex.f_vector().f(0), 16);
        assert!(bundle.coloring.is_proper(&bundle.complex));
        assert!(is_normal_pseudomanifold(&bundle.complex));
        assert_eq!(betti_f2(&bundle.complex).betti, vec![1, 1, 1, 1]);
    }

    #[test]
    fn bundle_doubles_attain_equality() {
        for kind in [BundleKind::Twisted, BundleKind::Orientable] {
            let built = build_bundle_double(kind);
            assert_eq!(built.complex.f_vector().0, vec![1, 16, 84, 136, 68]);
            assert!(built.coloring.is_proper(&built.complex));
            assert!(is_normal_pseudomanifold(&built.complex));
            let betti = betti_f2(&built.complex);
            assert_eq!(betti.reduced()[1], 2);
            assert_eq!(walkup_equality_gap(&built.complex, 2), 0);
            assert!(find_coloring(&built.complex).is_some());
        }
    }

    #[test]
    fn equality_gap_values() {
        let c = cross_polytope_boundary(3);
        assert_eq!(walkup_equality_gap(&c, 0), 0);
        let (stacked, _) = stacked_cross_polytopal_sphere(3, 4);
        assert_eq!(walkup_equality_gap(&stacked, 0), 0);
    }

    #[test]
    fn suspensions_of_cross_polytopes() {
        for d in 1..=2 {
            let susp = suspension_tower(&cross_polytope_boundary(d), 1);
            assert!(is_isomorphic(&susp, &cross_polytope_boundary(d + 1)).unwrap());
        }
        let tower = suspension_tower(&cross_polytope_boundary(3), 2);
        assert_eq!(tower.dim(), 5);
        assert_eq!(tower.f_vector().f(0), 12);
        assert!(find_coloring(&tower).is_some());
    }
}
