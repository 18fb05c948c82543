use lincolor::batch::{color_batch, map, map_seeds};
use lincolor::bench::{bench_linear_scaling, ops_slope, write_table};
use lincolor::gen::{gen_maximal_2deg_maxdeg4, gen_random_tdeg};
use lincolor::verify::verify_linear;
use lincolor::{color_instance, Class, ColorError, Exec, MutableGraph};

#[test]
fn parallel_and_sequential_batches_agree() {
    let graphs: Vec<MutableGraph> = (0..64).map(|s| gen_random_tdeg(200, 3, 7, s).unwrap()).collect();
    let a = color_batch(Exec::Sequential, &graphs, Class::ThreeDeg, None);
    let b = color_batch(Exec::Parallel, &graphs, Class::ThreeDeg, None);
    assert_eq!(a, b);
    for (g, r) in graphs.iter().zip(&a) {
        verify_linear(g, &r.as_ref().unwrap().coloring).unwrap();
    }
    let sq: Vec<u64> = map_seeds(Exec::Parallel, 0..100, |s| s * s);
    assert_eq!(sq, (0..100).map(|s| s * s).collect::<Vec<_>>());
    assert_eq!(map(Exec::Parallel, &[1, 2, 3], |x| x + 1), vec![2, 3, 4]);
}

#[test]
fn class_names_round_trip() {
    for c in Class::ALL {
        assert_eq!(c.name().parse::<Class>().unwrap(), c);
    }
    assert!("4deg".parse::<Class>().is_err());
}

#[test]
fn front_door_checks_k() {
    let g = gen_random_tdeg(30, 3, 7, 1).unwrap();
    let base = Class::ThreeDeg.default_k(&g);
    assert!(matches!(color_instance(&g, Class::ThreeDeg, Some(base - 1), None, false), Err(ColorError::BadK(_))));
    let more = color_instance(&g, Class::ThreeDeg, Some(base + 2), None, false).unwrap();
    assert_eq!(more.coloring.k, base + 2);
    let d = gen_maximal_2deg_maxdeg4(40, 2).unwrap();
    assert!(matches!(color_instance(&d, Class::TwoDegDense, Some(3), None, false), Err(ColorError::BadK(3))));
    let out = color_instance(&d, Class::TwoDegDense, None, None, false).unwrap();
    assert!(out.mono.count() <= 1);
}

#[test]
fn bench_table() {
    assert!(bench_linear_scaling(&[], Class::ThreeDeg, 0).unwrap().is_empty());
    assert!(bench_linear_scaling(&[200, 100], Class::ThreeDeg, 0).is_err());
    let rows = bench_linear_scaling(&[500, 1000, 2000], Class::ThreeDeg, 3).unwrap();
    let slope = ops_slope(&rows).unwrap();
    for r in &rows {
        assert!((r.ops_per_size() / slope - 1.0).abs() < 0.2);
    }
    let tsv = write_table(&rows);
    assert_eq!(tsv.lines().count(), 3);
    assert_eq!(tsv.lines().next().unwrap().split('\t').count(), 4);
    for class in Class::ALL {
        bench_linear_scaling(&[300], class, 1).unwrap();
    }
}
