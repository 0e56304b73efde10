mod common;

use common::{config, matrix};
use num_bigint::BigInt;
use num_traits::Signed;

use selfdual_core::config::{affine_dim, dedup, normalize_lattice, pyramid_decompose, regularize};
use selfdual_core::engine::{
    hypersurface_class, is_lawrence, is_segre, is_self_dual, is_strongly_self_dual,
    lawrence_strong_parity, smooth_certificate, HypersurfaceClass,
};
use selfdual_core::gale::{
    coparallel_classes, coparallel_criterion, gale_dual, is_facial, is_parallel_face_complement,
    line_partition, line_sums_zero, verify_gale_dual, GaleDual,
};
use selfdual_core::generators::{
    config_from_gale, family_alpha, family_codim, family_dim, family_dim_gale, lawrence, segre,
};
use selfdual_core::linalg::{
    hermite_normal_form, in_row_span, integer_kernel, positive_dependency, rational_rank,
    same_column_lattice, smith_normal_form, IntMatrix, RatVector,
};
use selfdual_core::oracle::{
    coparallel_via_circuits, enumerate_circuits, enumerate_flats, facial_via_separation,
    self_dual_via_flats, self_dual_via_sigma, strong_via_points,
};
use selfdual_core::{Configuration, Error, Witness};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn members(p: &selfdual_core::gale::LinePartition) -> Vec<Vec<usize>> {
    p.classes.iter().map(|c| c.members.clone()).collect()
}

#[test]
fn hermite_and_smith_small_cases() {
    let id = IntMatrix::identity(3);
    let hf = hermite_normal_form(&id);
    assert_eq!((hf.h, hf.u), (id.clone(), id.clone()));

    let m = matrix(&[vec![2, 4], vec![0, 2]]);
    let hf = hermite_normal_form(&m);
    assert_eq!(hf.h.det().abs(), BigInt::from(4));
    assert_eq!(hf.u.det().abs(), BigInt::from(1));

    let z = IntMatrix::zeros(2, 2);
    let hf = hermite_normal_form(&z);
    assert_eq!((hf.h, hf.u), (z, IntMatrix::identity(2)));

    let sf = smith_normal_form(&matrix(&[vec![2, 0], vec![0, 3]]));
    assert_eq!(sf.invariant_factors(), ints(&[1, 6]));
    let sf = smith_normal_form(&matrix(&[vec![1, 1], vec![1, 1]]));
    assert_eq!(sf.invariant_factors(), ints(&[1]));
    assert_eq!(sf.s, matrix(&[vec![1, 0], vec![0, 0]]));
}

#[test]
fn kernels_ranks_and_spans() {
    let k = integer_kernel(&matrix(&[vec![1, 1, 1], vec![0, 1, 2]]));
    assert_eq!(k.cols(), 1);
    let col = k.col(0);
    assert!(col == ints(&[1, -2, 1]) || col == ints(&[-1, 2, -1]));
    assert_eq!(integer_kernel(&IntMatrix::identity(4)).cols(), 0);
    let k = integer_kernel(&matrix(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]));
    let expected = matrix(&[vec![1, 0], vec![-2, 1], vec![1, -2], vec![0, 1]]);
    assert!(same_column_lattice(&k, &expected));

    assert_eq!(rational_rank(&IntMatrix::identity(5)), 5);
    assert_eq!(rational_rank(&IntMatrix::zeros(3, 2)), 0);
    assert_eq!(rational_rank(&matrix(&[vec![1, 2], vec![2, 4]])), 1);

    let m = matrix(&[vec![1, 1, 1], vec![0, 1, 2]]);
    assert!(in_row_span(&m, &RatVector::from_ints(&[0, 1, 2])).unwrap());
    assert!(in_row_span(&m, &RatVector::zeros(3)).unwrap());
    assert!(!in_row_span(&m, &RatVector::from_ints(&[1, 0, 0])).unwrap());
    assert!(in_row_span(&m, &RatVector::zeros(2)).is_err());
}

#[test]
fn positive_dependencies() {
    assert!(positive_dependency(&[ints(&[1]), ints(&[-1])])
        .unwrap()
        .is_some());
    assert!(positive_dependency(&[ints(&[1, 0]), ints(&[0, 1])])
        .unwrap()
        .is_none());
    assert!(positive_dependency(&[ints(&[1, 1]), ints(&[-1, -1])])
        .unwrap()
        .is_some());
    assert!(positive_dependency(&[]).is_err());
}

#[test]
fn configuration_reductions() {
    let s2 = segre(2).unwrap();
    assert!(s2.regular);
    // the identity columns lie on x + y = 1
    let id = config(&[vec![1, 0], vec![0, 1]]);
    assert!(id.regular && id.lattice_normalized);
    assert!(!config(&[vec![0, 1, 2]]).regular);
    assert!(!config(&[vec![2, 4]]).lattice_normalized);

    let line = Configuration::from_points(&[vec![0], vec![1], vec![2]]).unwrap();
    assert_eq!(
        regularize(&line).weights,
        matrix(&[vec![1, 1, 1], vec![0, 1, 2]])
    );
    assert_eq!(regularize(&s2), s2);
    let cubic = common::twisted_cubic();
    let reg = regularize(&cubic);
    assert_eq!(reg.weights.rows(), 2);
    assert_eq!(
        integer_kernel(&reg.weights),
        integer_kernel(&cubic.affine_matrix())
    );

    let (normal, _) = normalize_lattice(&config(&[vec![2, 4, 6]])).unwrap();
    assert_eq!(normal.weights, matrix(&[vec![1, 2, 3]]));
    let missing = common::missing_points();
    let (normal, e) = normalize_lattice(&missing).unwrap();
    assert_eq!(normal, missing);
    assert_eq!(e, IntMatrix::identity(4));

    let twice = config(&[vec![1, 1]]);
    let report = dedup(&twice);
    assert_eq!((report.distinct.len(), report.repeat_count()), (1, 1));
    let five = config(&[vec![1, 1, 2, 2, 2]]);
    let report = dedup(&five);
    assert_eq!(report.multiplicity, vec![2, 3]);
    assert_eq!(report.repeat_count(), 3);

    assert_eq!(affine_dim(&config(&[vec![1]])), 0);
    assert_eq!(affine_dim(&family_alpha(1).unwrap()), 4);
    assert_eq!(affine_dim(&segre(3).unwrap()), 3);
}

#[test]
fn pyramid_decompositions() {
    let r = pyramid_decompose(&segre(2).unwrap());
    assert!(!r.is_pyramidal());
    let r = pyramid_decompose(&common::conic_pyramid());
    assert_eq!(r.apex_indices, vec![3]);
    assert_eq!(r.core_indices, vec![0, 1, 2]);
    assert!(r.splitting_valid);
    let r = pyramid_decompose(&config(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]));
    assert_eq!(r.apex_count(), 3);
    assert!(r.core_indices.is_empty());
}

#[test]
fn gale_duals_of_named_examples() {
    for a in [1, 2, 3, -2] {
        let c = family_alpha(a).unwrap();
        assert!(same_column_lattice(
            &gale_dual(&c).matrix,
            &common::family_alpha_gale(a)
        ));
    }
    let b = gale_dual(&segre(2).unwrap());
    assert_eq!(b.rank(), 1);
    let col = b.matrix.col(0);
    assert!(col == ints(&[1, -1, -1, 1]) || col == ints(&[-1, 1, 1, -1]));
    let square = config(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]]);
    assert_eq!(gale_dual(&square).rank(), 0);

    let c = family_alpha(1).unwrap();
    let b = gale_dual(&c).matrix;
    assert!(!verify_gale_dual(&c, &b.scaled(&BigInt::from(2))).unwrap());
    assert!(verify_gale_dual(&c, &b.select_columns(&[1, 0])).unwrap());
    assert!(verify_gale_dual(&c, &IntMatrix::zeros(3, 2)).is_err());
}

#[test]
fn line_partitions_of_named_examples() {
    let b = GaleDual::from_matrix(common::family_alpha_gale(1));
    let p = line_partition(&b);
    assert_eq!(members(&p), vec![vec![0, 1, 2], vec![3, 4], vec![5, 6]]);
    assert!(p.classes.iter().all(|c| c.sums_to_zero()));

    let b = GaleDual::from_matrix(common::strong_nine_gale());
    let p = line_partition(&b);
    assert_eq!(
        members(&p),
        vec![vec![0, 1, 4], vec![2, 5, 7], vec![3, 6, 8]]
    );
    assert!(p.classes.iter().all(|c| c.sums_to_zero()));

    let same = GaleDual::from_matrix(matrix(&[vec![1, 2], vec![1, 2], vec![1, 2]]));
    let p = line_partition(&same);
    assert_eq!(p.classes.len(), 1);
    assert_eq!(p.classes[0].sum, ints(&[3, 6]));
}

#[test]
fn line_sum_verdicts() {
    let b = GaleDual::from_matrix(common::family_alpha_gale(2));
    assert!(line_sums_zero(&b).unwrap().value);

    let cubic = gale_dual(&common::twisted_cubic());
    let v = line_sums_zero(&cubic).unwrap();
    assert!(!v.value);
    assert!(matches!(v.witness, Witness::ViolatingLine { .. }));

    let conic = gale_dual(&Configuration::from_points(&[vec![0], vec![1], vec![2]]).unwrap());
    assert!(line_sums_zero(&conic).unwrap().value);

    let pyramid = gale_dual(&common::conic_pyramid());
    assert!(matches!(
        line_sums_zero(&pyramid),
        Err(Error::Pyramidal { .. })
    ));
}

#[test]
fn coparallelism_and_faces() {
    let s2 = segre(2).unwrap();
    assert_eq!(
        coparallel_classes(&gale_dual(&s2)).classes,
        vec![vec![0, 1, 2, 3]]
    );
    let c = family_alpha(1).unwrap();
    let gale_side = coparallel_classes(&gale_dual(&c)).classes;
    assert_eq!(gale_side, vec![vec![0, 1, 2], vec![3, 4], vec![5, 6]]);
    assert_eq!(coparallel_via_circuits(&c).unwrap(), gale_side);
    let pyramid = coparallel_via_circuits(&common::conic_pyramid()).unwrap();
    assert!(pyramid.contains(&vec![3]));

    let line = Configuration::from_points(&[vec![0], vec![1], vec![2]]).unwrap();
    assert!(is_facial(&line, &[0, 1, 2]).unwrap().value);
    assert!(is_facial(&line, &[0]).unwrap().value);
    assert!(!is_facial(&line, &[1]).unwrap().value);
    assert!(is_facial(&line, &[]).is_err());

    assert!(is_parallel_face_complement(&s2, &[0, 2]).unwrap().value);
    assert!(
        is_parallel_face_complement(&s2, &[0, 1, 2, 3])
            .unwrap()
            .value
    );
    assert!(!is_parallel_face_complement(&line, &[1]).unwrap().value);

    assert!(coparallel_criterion(&c).unwrap().value);
    assert!(
        !coparallel_criterion(&common::twisted_cubic())
            .unwrap()
            .value
    );
}

#[test]
fn self_duality_of_named_examples() {
    for a in [1, 2, 3] {
        assert!(is_self_dual(&family_alpha(a).unwrap()).value);
    }
    assert!(!is_self_dual(&common::twisted_cubic()).value);
    assert!(!is_self_dual(&common::conic_pyramid()).value);
    assert!(is_self_dual(&common::interior_point_faces()).value);
    assert!(is_self_dual(&common::missing_points()).value);
    assert!(verify_gale_dual(&common::missing_points(), &common::missing_points_gale()).unwrap());
    // a doubled point on P^1
    assert!(is_self_dual(&config(&[vec![1, 1]])).value);
}

#[test]
fn strong_self_duality_and_lawrence() {
    assert!(is_strongly_self_dual(&common::strong_nine()).unwrap().value);
    assert!(is_strongly_self_dual(&segre(2).unwrap()).unwrap().value);
    let conic = config_from_gale(&matrix(&[vec![2], vec![-1], vec![-1]])).unwrap();
    assert!(is_self_dual(&conic).value);
    assert!(!is_strongly_self_dual(&conic).unwrap().value);
    assert!(!strong_via_points(&conic, 3).unwrap());

    let m = matrix(&[vec![1, 2, 0], vec![0, 1, 1]]);
    assert_eq!(is_lawrence(&lawrence(&m).unwrap()), Some(m));
    assert_eq!(is_lawrence(&common::strong_nine()), None);
    let s3 = segre(3).unwrap();
    assert_eq!(is_lawrence(&s3), Some(matrix(&[vec![1, 1, 1]])));

    let ones = matrix(&[vec![1, 1, 1]]);
    let v = lawrence_strong_parity(&ones);
    assert!(v.value);
    assert!(matches!(v.witness, Witness::ParitySubset { ref rows, .. } if rows == &vec![0]));

    assert_eq!(is_segre(&s3), Some(3));
    assert_eq!(is_segre(&segre(2).unwrap()), Some(2));
    assert_eq!(is_segre(&family_alpha(1).unwrap()), None);
}

#[test]
fn hypersurfaces() {
    assert_eq!(
        hypersurface_class(&config(&[vec![1, 1]])),
        HypersurfaceClass::Point
    );
    let segment = Configuration::from_points(&[vec![0], vec![1]]).unwrap();
    assert_eq!(
        hypersurface_class(&segment),
        HypersurfaceClass::NotHypersurface
    );
    let line = Configuration::from_points(&[vec![0], vec![1], vec![2]]).unwrap();
    assert_eq!(hypersurface_class(&line), HypersurfaceClass::Conic);
    assert_eq!(
        hypersurface_class(&segre(2).unwrap()),
        HypersurfaceClass::SegreQuadric
    );
    assert_eq!(
        hypersurface_class(&common::twisted_cubic()),
        HypersurfaceClass::NotHypersurface
    );
}

#[test]
fn smooth_certificates() {
    for m in 2..=4 {
        assert!(smooth_certificate(&segre(m).unwrap()).unwrap().value);
    }
    let v = smooth_certificate(&common::interior_point_faces()).unwrap();
    assert!(!v.value);
    assert!(matches!(v.witness, Witness::NotCertified { .. }));
    assert!(!smooth_certificate(&common::missing_points()).unwrap().value);
    assert!(smooth_certificate(&config(&[vec![1, 1]])).is_err());
}

#[test]
fn oracle_examples() {
    let line = Configuration::from_points(&[vec![0], vec![1], vec![2]]).unwrap();
    let circuits = enumerate_circuits(&line).unwrap();
    assert_eq!(circuits.len(), 1);
    assert_eq!(circuits[0].relation, ints(&[1, -2, 1]));
    assert!(enumerate_circuits(&config(&[vec![1, 0], vec![0, 1]]))
        .unwrap()
        .is_empty());
    let circuits = enumerate_circuits(&segre(2).unwrap()).unwrap();
    assert_eq!(circuits.len(), 1);
    assert_eq!(circuits[0].relation, ints(&[1, -1, -1, 1]));

    let flats = enumerate_flats(&gale_dual(&line)).unwrap();
    assert!(flats
        .iter()
        .any(|f| f.closure == vec![0, 1, 2] && f.rank == 1));
    let b = GaleDual::from_matrix(common::family_alpha_gale(1));
    let closures: Vec<_> = enumerate_flats(&b)
        .unwrap()
        .into_iter()
        .map(|f| f.closure)
        .collect();
    for class in [vec![0, 1, 2], vec![3, 4], vec![5, 6]] {
        assert!(closures.contains(&class));
    }
    assert!(self_dual_via_flats(&b).unwrap());
    assert!(!self_dual_via_flats(&gale_dual(&common::twisted_cubic())).unwrap());

    assert!(self_dual_via_sigma(&regularize(&family_alpha(1).unwrap())).unwrap());
    assert!(!self_dual_via_sigma(&regularize(&common::twisted_cubic())).unwrap());
    assert!(self_dual_via_sigma(&config(&[vec![0, 1, 2]])).is_err());

    assert!(strong_via_points(&common::strong_nine(), 3).unwrap());
    assert!(strong_via_points(&segre(2).unwrap(), 3).unwrap());

    assert!(facial_via_separation(&line, &[0]));
    assert!(!facial_via_separation(&line, &[1]));
}

#[test]
fn generator_families() {
    let s2 = segre(2).unwrap();
    assert_eq!(s2.weights.rows(), 3);
    assert_eq!(s2.len(), 4);
    for m in 2..=5 {
        assert!(gale_dual(&segre(m).unwrap()).zero_rows().is_empty());
    }

    // pyramidal M gives a pyramidal lift
    let m = matrix(&[vec![1, 1, 0], vec![0, 0, 1]]);
    assert!(!gale_dual(&lawrence(&m).unwrap()).zero_rows().is_empty());

    let c = family_dim(2, &[1, -1]).unwrap();
    assert_eq!(affine_dim(&c), 3);
    assert!(is_self_dual(&c).value);
    let printed = family_dim_gale(2, &[1, -1]).unwrap();
    assert!(verify_gale_dual(&c, &printed).unwrap());
    for alphas in [vec![2, -2], vec![1, 2, -3], vec![3, -1, -1, -1]] {
        let c = family_dim(alphas.len(), &alphas).unwrap();
        assert_eq!(affine_dim(&c), alphas.len() + 1);
        assert!(is_self_dual(&c).value);
    }
    for (m, alphas) in [(2, vec![1, -1]), (3, vec![1, -1]), (3, vec![2, 1, -3])] {
        let c = family_codim(m, alphas.len(), &alphas).unwrap();
        assert_eq!(affine_dim(&c), m + alphas.len() - 1);
        assert_eq!(gale_dual(&c).rank(), m);
        assert!(gale_dual(&c).zero_rows().is_empty());
        assert!(is_self_dual(&c).value);
    }

    let back = config_from_gale(&gale_dual(&s2).matrix).unwrap();
    assert!(same_column_lattice(
        &gale_dual(&back).matrix,
        &gale_dual(&s2).matrix
    ));
    let from_printed = config_from_gale(&common::family_alpha_gale(1)).unwrap();
    assert!(same_column_lattice(
        &gale_dual(&from_printed).matrix,
        &gale_dual(&family_alpha(1).unwrap()).matrix
    ));
}
