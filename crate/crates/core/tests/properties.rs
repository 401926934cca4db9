use polycode::polyhedron::{self, Face, Polyhedron};
use proptest::prelude::*;

/// Tetrahedron with `picks.len()` stellar subdivisions: each pick selects a
/// triangle, which is replaced by three triangles around a new vertex.
fn stellar(picks: &[usize]) -> Polyhedron {
    let mut tris: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 3, 1], [1, 3, 2], [2, 3, 0]];
    let mut n = 4;
    for &pick in picks {
        let [a, b, c] = tris.swap_remove(pick % tris.len());
        tris.extend([[a, b, n], [b, c, n], [c, a, n]]);
        n += 1;
    }
    let faces = tris.iter().map(|t| Face::new(t.to_vec(), None)).collect();
    Polyhedron::new(n, faces)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rhombify_of_triangulation_is_a_sphere(picks in prop::collection::vec(any::<usize>(), 0..12)) {
        let tri = stellar(&picks);
        let before = tri.validate().unwrap();
        let rh = tri.rhombify().unwrap();
        let after = rh.validate().unwrap();
        prop_assert_eq!(after.euler_characteristic(), 2);
        prop_assert_eq!(after.vertices, before.vertices + before.faces);
        prop_assert_eq!(after.faces, before.edges);
        prop_assert_eq!(after.edges, 2 * before.edges);
        prop_assert!(rh.faces().iter().all(|f| f.vertices.len() == 4));

        let old = tri.degrees();
        let new = rh.degrees();
        prop_assert_eq!(&new[..tri.n_vertices()], &old[..]);
        prop_assert!(new[tri.n_vertices()..].iter().all(|&d| d == 3));
    }

    #[test]
    fn text_format_round_trips(picks in prop::collection::vec(any::<usize>(), 0..8)) {
        let rh = stellar(&picks).rhombify().unwrap();
        let parsed: Polyhedron = rh.to_text().parse().unwrap();
        prop_assert_eq!(parsed, rh);
    }
}

#[test]
fn cube_rhombus_is_the_builtin_rd() {
    let rd = polyhedron::rhombic_dodecahedron();
    let built = polyhedron::cube().rhombify().unwrap();
    assert!(built.find_isomorphism(&rd.without_colors()).is_some());
}
