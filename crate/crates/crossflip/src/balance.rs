//! Balancedness: proper vertex colorings with d+1 colors.
//!
//! A pure d-complex is balanced when its 1-skeleton is (d+1)-colorable,
//! equivalently every facet shows all d+1 colors. On a strongly connected
//! complex the coloring is forced once one facet is colored: walking the
//! dual graph, each new facet has exactly one uncolored vertex and exactly
//! one missing color. `find_coloring` exploits that; the only choices are
//! the start facet of each dual component, handled by backtracking over
//! the start facet's free colors.

use std::collections::{BTreeMap, VecDeque};

use crate::complex::{Complex, Vertex};

/// A proper (d+1)-coloring in canonical form: color classes are numbered
/// by ascending (size, smallest member).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: BTreeMap<Vertex, usize>,
    n_colors: usize,
}

impl Coloring {
    /// Wraps an explicit assignment, renumbering colors canonically.
    pub fn new(assignment: BTreeMap<Vertex, usize>, n_colors: usize) -> Coloring {
        Coloring {
            assignment,
            n_colors,
        }
        .canonicalized()
    }

    pub fn color(&self, v: Vertex) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    pub fn n_colors(&self) -> usize {
        self.n_colors
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    /// Color classes as sorted vertex lists, indexed by color.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.n_colors];
        for (&v, &c) in &self.assignment {
            classes[c].push(v);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes().iter().map(|c| c.len()).collect()
    }

    /// Every vertex colored, every facet rainbow.
    pub fn is_proper(&self, c: &Complex) -> bool {
        if c.vertex_set().iter().any(|v| !self.assignment.contains_key(v)) {
            return false;
        }
        c.facets().iter().all(|f| {
            let mut seen = 0u64;
            f.iter().all(|v| {
                let col = self.assignment[v];
                let fresh = seen >> col & 1 == 0;
                seen |= 1 << col;
                col < self.n_colors && fresh
            })
        })
    }

    /// Renumbers colors so classes come in ascending (size, smallest
    /// member) order; the canonical representative of the permutation
    /// orbit.
    fn canonicalized(self) -> Coloring {
        // (size, smallest member, old color); empty classes sort last.
        let mut stats: Vec<(usize, Vertex, usize)> =
            (0..self.n_colors).map(|c| (0, Vertex::MAX, c)).collect();
        for (&v, &c) in &self.assignment {
            stats[c].0 += 1;
            stats[c].1 = stats[c].1.min(v);
        }
        for s in &mut stats {
            if s.0 == 0 {
                s.0 = usize::MAX;
            }
        }
        stats.sort_unstable();
        let mut relabel = vec![0usize; self.n_colors];
        for (new, &(_, _, old)) in stats.iter().enumerate() {
            relabel[old] = new;
        }
        Coloring {
            assignment: self
                .assignment
                .into_iter()
                .map(|(v, c)| (v, relabel[c]))
                .collect(),
            n_colors: self.n_colors,
        }
    }
}

/// Per-dimension color multisets of a subcomplex: entry k lists, sorted,
/// the color of every vertex incidence of a k-face. Row 0 is one color
/// per vertex (its counts are the class sizes); on a balanced complex
/// the top row of a single facet is rainbow.
pub fn color_signature(coloring: &Coloring, sub: &Complex) -> Vec<Vec<usize>> {
    (0..=sub.dim())
        .map(|k| {
            let mut row: Vec<usize> = sub
                .faces_of_dim(k)
                .iter()
                .flat_map(|f| f.iter().map(|&v| coloring.color(v).expect("colored vertex")))
                .collect();
            row.sort_unstable();
            row
        })
        .collect()
}

/// Finds the proper (d+1)-coloring of a pure complex if one exists.
///
/// Works facet-rainbow propagation along each dual-graph component; the
/// free colors of a component's start facet are the only branch points.
/// Returns `None` for non-pure input or when no proper coloring exists.
pub fn find_coloring(c: &Complex) -> Option<Coloring> {
    if !c.is_pure() {
        return None;
    }
    let d = c.dim();
    if d < 0 {
        return Some(Coloring::new(BTreeMap::new(), 0));
    }
    let n_colors = (d + 1) as usize;
    let dual = c.dual_graph().expect("purity checked");
    let mut colors: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut component_of = vec![usize::MAX; c.n_facets()];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..c.n_facets() {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut queue = VecDeque::from([start]);
        component_of[start] = id;
        let mut members = vec![start];
        while let Some(f) = queue.pop_front() {
            for &g in &dual.adjacency[f] {
                if component_of[g] == usize::MAX {
                    component_of[g] = id;
                    members.push(g);
                    queue.push_back(g);
                }
            }
        }
        components.push(members);
    }
    for members in &components {
        if !color_component(c, &dual.adjacency, members, n_colors, &mut colors) {
            return None;
        }
    }
    let coloring = Coloring::new(colors, n_colors);
    coloring.is_proper(c).then_some(coloring)
}

/// Colors one dual component. Colors fixed by earlier components at shared
/// vertices stay fixed; on failure all colors assigned here are rolled
/// back and the next start-facet assignment is tried.
fn color_component(
    c: &Complex,
    adjacency: &[Vec<usize>],
    members: &[usize],
    n_colors: usize,
    colors: &mut BTreeMap<Vertex, usize>,
) -> bool {
    let start = members[0];
    let start_facet = &c.facets()[start];
    let fixed: Vec<usize> = start_facet
        .iter()
        .filter_map(|v| colors.get(v).copied())
        .collect();
    if fixed.len() != fixed.iter().collect::<std::collections::HashSet<_>>().len() {
        return false;
    }
    let free_vertices: Vec<Vertex> = start_facet
        .iter()
        .copied()
        .filter(|v| !colors.contains_key(v))
        .collect();
    let free_colors: Vec<usize> = (0..n_colors).filter(|c| !fixed.contains(c)).collect();
    if free_vertices.len() != free_colors.len() {
        return false;
    }
    let mut perm_state: Vec<usize> = (0..free_colors.len()).collect();
    loop {
        let mut assigned: Vec<Vertex> = Vec::new();
        for (i, &v) in free_vertices.iter().enumerate() {
            colors.insert(v, free_colors[perm_state[i]]);
            assigned.push(v);
        }
        if propagate(c, adjacency, start, members, n_colors, colors, &mut assigned) {
            return true;
        }
        for v in assigned {
            colors.remove(&v);
        }
        if !next_permutation(&mut perm_state) {
            return false;
        }
    }
}

fn propagate(
    c: &Complex,
    adjacency: &[Vec<usize>],
    start: usize,
    members: &[usize],
    n_colors: usize,
    colors: &mut BTreeMap<Vertex, usize>,
    assigned: &mut Vec<Vertex>,
) -> bool {
    let in_component: std::collections::HashSet<usize> = members.iter().copied().collect();
    let mut visited: std::collections::HashSet<usize> = [start].into();
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        let facet = &c.facets()[f];
        let mut used = 0u64;
        let mut missing: Option<Vertex> = None;
        for &v in facet {
            match colors.get(&v) {
                Some(&col) => {
                    if used >> col & 1 == 1 {
                        return false;
                    }
                    used |= 1 << col;
                }
                None if missing.is_some() => return false,
                None => missing = Some(v),
            }
        }
        if let Some(v) = missing {
            let col = (0..n_colors).find(|c| used >> c & 1 == 0).expect("one color free");
            colors.insert(v, col);
            assigned.push(v);
        }
        for &g in &adjacency[f] {
            if in_component.contains(&g) && visited.insert(g) {
                queue.push_back(g);
            }
        }
    }
    // Per-component facets are all rainbow at this point; cross-component
    // conflicts are caught by the caller's final properness check.
    members.iter().all(|&f| {
        let mut used = 0u64;
        c.facets()[f].iter().all(|v| match colors.get(v) {
            Some(&col) => {
                let fresh = used >> col & 1 == 0;
                used |= 1 << col;
                fresh
            }
            None => false,
        })
    })
}

/// Advances `perm` to the next lexicographic permutation in place.
fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope_boundary, standard_sphere, Complex};

    #[test]
    fn cross_polytopes_are_balanced_with_pair_classes() {
        for d in 1..=4 {
            let c = cross_polytope_boundary(d);
            let coloring = find_coloring(&c).expect("balanced");
            assert!(coloring.is_proper(&c));
            assert_eq!(coloring.class_sizes(), vec![2; d + 1]);
            // Classes are exactly the antipodal pairs.
            for class in coloring.classes() {
                assert_eq!(class.len(), 2);
                assert_eq!(class[1] - class[0], d as Vertex + 1);
            }
        }
    }

    #[test]
    fn simplex_boundaries_are_not_balanced() {
        // The 1-skeleton is complete on d+2 vertices: needs d+2 colors.
        for d in 1..=4 {
            assert!(find_coloring(&standard_sphere(d)).is_none());
        }
    }

    #[test]
    fn barycentric_subdivisions_are_balanced_by_face_dimension() {
        for d in 1..=3 {
            let c = standard_sphere(d).barycentric_subdivision();
            let coloring = find_coloring(&c).expect("subdivisions are balanced");
            let mut expected: Vec<usize> = standard_sphere(d).f_vector().0[1..].to_vec();
            expected.sort_unstable();
            assert_eq!(coloring.class_sizes(), expected);
        }
    }

    #[test]
    fn nine_vertex_torus_is_balanced() {
        // Z_3 x Z_3 grid torus: triangles (i,j),(i+1,j),(i,j+1) and
        // (i+1,j),(i,j+1),(i+1,j+1), with vertex 3i+j.
        let v = |i: u32, j: u32| 3 * (i % 3) + (j % 3);
        let mut facets = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                facets.push(vec![v(i, j), v(i + 1, j), v(i, j + 1)]);
                facets.push(vec![v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)]);
            }
        }
        let torus = Complex::from_facets(facets).unwrap();
        assert_eq!(torus.f_vector().0, vec![1, 9, 27, 18]);
        let coloring = find_coloring(&torus).expect("K_3,3,3 torus is balanced");
        assert_eq!(coloring.class_sizes(), vec![3, 3, 3]);
    }

    #[test]
    fn color_signature_rows_follow_face_dimension() {
        let c = cross_polytope_boundary(2);
        let coloring = find_coloring(&c).unwrap();

        // A facet is rainbow; its top row carries every color once.
        let facet = c.induced_subcomplex(&c.facets()[0].clone());
        let sig = color_signature(&coloring, &facet);
        assert_eq!(sig.last().unwrap(), &vec![0, 1, 2]);

        // A ridge misses exactly one color.
        let ridge = c.induced_subcomplex(&[0, 1]);
        assert_eq!(color_signature(&coloring, &ridge), vec![vec![0, 1], vec![0, 1]]);

        // Row 0 of the whole complex has the class sizes as color counts.
        let whole = color_signature(&coloring, &c);
        assert_eq!(whole[0], vec![0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn coloring_is_canonical_under_relabeling() {
        let c = cross_polytope_boundary(2);
        let coloring = find_coloring(&c).unwrap();
        // Class 0 must start with the smallest vertex among the smallest
        // classes; all classes have size 2 here, so class 0 contains 0.
        assert_eq!(coloring.color(0), Some(0));
    }

    #[test]
    fn disconnected_input_gets_per_component_coloring() {
        let c = Complex::from_facets(vec![vec![0, 1, 2], vec![5, 6, 7]]).unwrap();
        let coloring = find_coloring(&c).expect("two triangles");
        assert!(coloring.is_proper(&c));
    }

    #[test]
    fn shared_vertex_components_backtrack() {
        // Two triangles sharing one vertex: second component must respect
        // the shared vertex's color.
        let c = Complex::from_facets(vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let coloring = find_coloring(&c).expect("colorable");
        assert!(coloring.is_proper(&c));
    }

    #[test]
    fn odd_cycle_is_not_balanced() {
        let c = Complex::from_facets(vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        // Dimension 1 needs a proper 2-coloring; the triangle has none.
        assert!(find_coloring(&c).is_none());
    }

    #[test]
    fn non_pure_input_is_rejected() {
        let c = Complex::from_facets(vec![vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert!(find_coloring(&c).is_none());
    }
}
