mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trirealize::realizer::{find_overlaps, perimeter_area, similarity_deviation};
use trirealize::{
    closure_residual, measure_angles, realizability_verdict, realize, realize_from, verify_convex, Tolerances,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn measured_maps_are_realizable(seed in any::<u64>()) {
        let d = common::random_convex_triangulation(&mut ChaCha8Rng::seed_from_u64(seed), 1.0);
        let v = realizability_verdict(&d.figure, &d.angles, &Tolerances::MEASURED).unwrap();
        prop_assert!(v.realizable, "{v}");
    }

    #[test]
    fn round_trip_and_oracle_agreement(seed in any::<u64>()) {
        let d = common::random_convex_triangulation(&mut ChaCha8Rng::seed_from_u64(seed), 1.0);
        let real = realize(&d.figure, &d.angles, 1e-7).unwrap();
        let back = measure_angles(&real, &d.figure).unwrap();
        prop_assert!(back.max_abs_diff(&d.angles) < 1e-7);
        prop_assert!(similarity_deviation(&d.figure, &real.coords, &d.points) < 1e-9);
        prop_assert!(real.max_closure_residual() < 1e-9);
    }

    #[test]
    fn seed_triangle_does_not_matter(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let d = common::random_convex_triangulation(&mut ChaCha8Rng::seed_from_u64(seed), 1.0);
        let t = pick.index(d.figure.triangles().len());
        let a = realize(&d.figure, &d.angles, 1e-7).unwrap();
        let b = realize_from(&d.figure, &d.angles, t, 1e-7).unwrap();
        prop_assert!(similarity_deviation(&d.figure, &a.coords, &b.coords) < 1e-9);
    }

    #[test]
    fn area_is_conserved(seed in any::<u64>()) {
        let d = common::random_convex_triangulation(&mut ChaCha8Rng::seed_from_u64(seed), 1.0);
        let real = realize(&d.figure, &d.angles, 1e-7).unwrap();
        let parts: f64 = d.figure.triangles().iter().map(|t| {
            let [a, b, c] = t.corners.map(|k| real.coords[k]);
            0.5 * (b - a).cross(c - a)
        }).sum();
        let whole = perimeter_area(&real, &d.figure).unwrap();
        prop_assert!(((parts - whole) / whole).abs() < 1e-9);
        prop_assert!(verify_convex(&real, &d.figure).unwrap());
        prop_assert!(find_overlaps(&real, &d.figure).is_empty());
    }

    #[test]
    fn fans_close(seed in any::<u64>(), n in 3usize..=8) {
        let d = common::random_fan(&mut ChaCha8Rng::seed_from_u64(seed), n, 15.0);
        prop_assert!(closure_residual(&d.figure, &d.angles, 0).unwrap().max() < 1e-9);
    }
}
