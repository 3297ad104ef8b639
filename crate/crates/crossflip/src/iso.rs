//! Combinatorial isomorphism of complexes.
//!
//! Backtracking over vertex bijections, pruned by an iterated degree/link
//! refinement (Weisfeiler-Leman style): vertices may only map to vertices
//! with the same refined class, and partial maps must already restrict to
//! 1-skeleton isomorphisms. Intended for desk-scale complexes; a hard
//! vertex cap keeps adversarial inputs from hanging the caller.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::complex::{Complex, Face, Vertex};
use crate::error::{Error, Result};

/// Hard ceiling on vertex count for isomorphism searches.
pub const ISO_VERTEX_CAP: usize = 64;

const REFINEMENT_ROUNDS: usize = 3;

/// Indexed view of a complex: vertices renamed to 0..n, adjacency as
/// bitmasks, facets as sorted index lists.
struct Indexed {
    labels: Vec<Vertex>,
    adj: Vec<u64>,
    facets: Vec<Vec<usize>>,
    facet_set: HashSet<Vec<usize>>,
    classes: Vec<u64>,
}

impl Indexed {
    fn new(c: &Complex) -> Result<Indexed> {
        let labels: Vec<Vertex> = c.vertex_set().to_vec();
        let n = labels.len();
        if n > ISO_VERTEX_CAP {
            return Err(Error::SizeExceeded {
                got: n,
                cap: ISO_VERTEX_CAP,
            });
        }
        let index: HashMap<Vertex, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![0u64; n];
        let mut facets: Vec<Vec<usize>> = Vec::with_capacity(c.n_facets());
        for f in c.facets() {
            let mut g: Vec<usize> = f.iter().map(|v| index[v]).collect();
            g.sort_unstable();
            for i in 0..g.len() {
                for j in i + 1..g.len() {
                    adj[g[i]] |= 1 << g[j];
                    adj[g[j]] |= 1 << g[i];
                }
            }
            facets.push(g);
        }
        let facet_set = facets.iter().cloned().collect();
        let classes = refine(c, &labels, &adj);
        Ok(Indexed {
            labels,
            adj,
            facets,
            facet_set,
            classes,
        })
    }
}

/// Iterated vertex invariant: start from the link f-vector, then fold in
/// the sorted multiset of neighbor invariants a few times.
fn refine(c: &Complex, labels: &[Vertex], adj: &[u64]) -> Vec<u64> {
    let n = labels.len();
    let mut inv: Vec<u64> = labels
        .iter()
        .map(|&v| {
            let link = c.link(&[v]).expect("vertex present");
            stable_hash(&link.f_vector().0)
        })
        .collect();
    for _ in 0..REFINEMENT_ROUNDS {
        let mut next = Vec::with_capacity(n);
        for u in 0..n {
            let mut nbr: Vec<u64> = (0..n).filter(|&w| adj[u] >> w & 1 == 1).map(|w| inv[w]).collect();
            nbr.sort_unstable();
            next.push(stable_hash(&(inv[u], nbr)));
        }
        inv = next;
    }
    inv
}

fn stable_hash<T: Hash>(value: &T) -> u64 {
    // DefaultHasher with default keys is deterministic within a build,
    // which is all the class partitioning needs.
    let mut h = DefaultHasher::new();
    value.hash(&mut h);
    h.finish()
}

fn class_census(classes: &[u64]) -> Vec<(u64, usize)> {
    let mut census: HashMap<u64, usize> = HashMap::new();
    for &c in classes {
        *census.entry(c).or_insert(0) += 1;
    }
    let mut v: Vec<(u64, usize)> = census.into_iter().collect();
    v.sort_unstable();
    v
}

/// Search order: most-constrained class first, then grow through the
/// 1-skeleton so each new vertex is adjacent to a mapped one when possible.
fn search_order(a: &Indexed) -> Vec<usize> {
    let n = a.labels.len();
    let mut class_size: HashMap<u64, usize> = HashMap::new();
    for &c in &a.classes {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut frontier = 0u64;
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&u| !placed[u])
            .min_by_key(|&u| {
                let attached = frontier >> u & 1 == 1;
                (!attached, class_size[&a.classes[u]], u)
            })
            .expect("unplaced vertex remains");
        placed[pick] = true;
        frontier |= a.adj[pick];
        order.push(pick);
    }
    order
}

fn compatible(a: &Indexed, b: &Indexed) -> bool {
    a.labels.len() == b.labels.len()
        && a.facets.len() == b.facets.len()
        && class_census(&a.classes) == class_census(&b.classes)
}

/// Backtracking core: tries to extend vertex maps a -> b respecting
/// refined classes and adjacency; on a full map, checks facet bijection.
fn extend(
    a: &Indexed,
    b: &Indexed,
    order: &[usize],
    pos: usize,
    map: &mut Vec<usize>,
    used: &mut u64,
) -> bool {
    if pos == order.len() {
        return a
            .facets
            .iter()
            .all(|f| b.facet_set.contains(&image_face(f, map)));
    }
    let u = order[pos];
    let n = b.labels.len();
    for w in 0..n {
        if *used >> w & 1 == 1 || a.classes[u] != b.classes[w] {
            continue;
        }
        // Partial map must already be a 1-skeleton isomorphism.
        let consistent = order[..pos].iter().all(|&x| {
            let ax = a.adj[u] >> x & 1;
            let bx = b.adj[w] >> map[x] & 1;
            ax == bx
        });
        if !consistent {
            continue;
        }
        map[u] = w;
        *used |= 1 << w;
        if extend(a, b, order, pos + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
    }
    false
}

fn image_face(f: &[usize], map: &[usize]) -> Vec<usize> {
    let mut g: Vec<usize> = f.iter().map(|&u| map[u]).collect();
    g.sort_unstable();
    g
}

/// Whether two complexes are isomorphic as abstract simplicial complexes.
pub fn is_isomorphic(a: &Complex, b: &Complex) -> Result<bool> {
    // Cap first: f-vectors of large complexes are themselves expensive.
    if a.n_vertices() > ISO_VERTEX_CAP || b.n_vertices() > ISO_VERTEX_CAP {
        return Err(Error::SizeExceeded {
            got: a.n_vertices().max(b.n_vertices()),
            cap: ISO_VERTEX_CAP,
        });
    }
    if a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    let ia = Indexed::new(a)?;
    let ib = Indexed::new(b)?;
    if !compatible(&ia, &ib) {
        return Ok(false);
    }
    let order = search_order(&ia);
    let mut map = vec![usize::MAX; ia.labels.len()];
    let mut used = 0u64;
    Ok(extend(&ia, &ib, &order, 0, &mut map, &mut used))
}

/// Searches for a fixed-point-free simplicial involution: a vertex
/// bijection of order two moving every vertex, mapping facets to facets,
/// and fixing no face setwise. Returns one witness as a label map.
pub fn find_free_involution(c: &Complex) -> Result<Option<HashMap<Vertex, Vertex>>> {
    let ic = Indexed::new(c)?;
    let n = ic.labels.len();
    if n % 2 != 0 {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; n];
    if !extend_involution(&ic, &mut map, 0) {
        return Ok(None);
    }
    Ok(Some(
        map.iter()
            .enumerate()
            .map(|(u, &w)| (ic.labels[u], ic.labels[w]))
            .collect(),
    ))
}

fn extend_involution(c: &Indexed, map: &mut Vec<usize>, from: usize) -> bool {
    let n = c.labels.len();
    let u = match (from..n).find(|&u| map[u] == usize::MAX) {
        Some(u) => u,
        None => {
            return c
                .facets
                .iter()
                .all(|f| {
                    let img = image_face(f, map);
                    img != *f && c.facet_set.contains(&img)
                })
                && no_fixed_face(c, map);
        }
    };
    for w in u + 1..n {
        if map[w] != usize::MAX || c.classes[u] != c.classes[w] {
            continue;
        }
        let consistent = (0..n).filter(|&x| map[x] != usize::MAX).all(|x| {
            (c.adj[u] >> x & 1) == (c.adj[w] >> map[x] & 1)
                && (c.adj[w] >> x & 1) == (c.adj[u] >> map[x] & 1)
        });
        if !consistent {
            continue;
        }
        map[u] = w;
        map[w] = u;
        if extend_involution(c, map, u + 1) {
            return true;
        }
        map[u] = usize::MAX;
        map[w] = usize::MAX;
    }
    false
}

fn no_fixed_face(c: &Indexed, map: &[usize]) -> bool {
    // Enough to check all subsets of facets; a fixed face would be fixed
    // inside every facet containing it, so checking faces facet-by-facet
    // covers everything.
    for f in &c.facets {
        let k = f.len();
        for mask in 1u32..(1 << k) {
            let sub: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            if image_face(&sub, map) == sub {
                return false;
            }
        }
    }
    true
}

/// Convenience wrapper: isomorphism after relabeling via an explicit map.
pub fn relabel(c: &Complex, map: &HashMap<Vertex, Vertex>) -> Complex {
    let facets: Vec<Face> = c
        .facets()
        .iter()
        .map(|f| {
            let mut g: Face = f.iter().map(|v| *map.get(v).unwrap_or(v)).collect();
            g.sort_unstable();
            g
        })
        .collect();
    Complex::from_facets(facets).expect("relabeling preserves non-emptiness")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope_boundary, standard_sphere};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_relabel(c: &Complex, seed: u64) -> Complex {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut target: Vec<Vertex> = (100..100 + c.n_vertices() as Vertex).collect();
        target.shuffle(&mut rng);
        let map: HashMap<Vertex, Vertex> = c
            .vertex_set()
            .iter()
            .copied()
            .zip(target)
            .collect();
        relabel(c, &map)
    }

    #[test]
    fn isomorphic_to_itself_and_relabelings() {
        for c in [standard_sphere(2), cross_polytope_boundary(2), cross_polytope_boundary(3)] {
            assert!(is_isomorphic(&c, &c).unwrap());
            for seed in 0..5 {
                let r = random_relabel(&c, seed);
                assert!(is_isomorphic(&c, &r).unwrap());
                assert!(is_isomorphic(&r, &c).unwrap());
            }
        }
    }

    #[test]
    fn distinguishes_different_spheres() {
        // Same dimension, different f-vectors.
        assert!(!is_isomorphic(&standard_sphere(2), &cross_polytope_boundary(2)).unwrap());
        // Same f-vector, different complexes: octahedron vs. a stacked
        // 6-vertex sphere (two tetrahedra glued, then one more stacked).
        let stacked = Complex::from_facets(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 5],
            vec![1, 4, 5],
            vec![2, 3, 4],
            vec![3, 4, 5],
        ])
        .unwrap();
        let oct = cross_polytope_boundary(2);
        assert_eq!(stacked.f_vector(), oct.f_vector());
        assert!(stacked.is_pseudomanifold());
        assert!(!is_isomorphic(&stacked, &oct).unwrap());
    }

    #[test]
    fn size_cap_is_enforced() {
        let big = standard_sphere(63);
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn octahedron_has_free_involution() {
        // The antipodal map.
        let c = cross_polytope_boundary(2);
        let inv = find_free_involution(&c).unwrap().expect("antipodal map");
        for (v, w) in &inv {
            assert_ne!(v, w);
            assert_eq!(inv[w], *v);
        }
    }

    #[test]
    fn simplex_boundary_has_no_free_involution() {
        // d even: odd vertex count; d=3: 5 vertices, also odd.
        assert!(find_free_involution(&standard_sphere(2)).unwrap().is_none());
        // The square does have one, the triangle does not.
        assert!(find_free_involution(&standard_sphere(1)).unwrap().is_none());
    }
}
