use criterion::{black_box, criterion_group, criterion_main, Criterion};

use njp_core::{
    build_tree, char_to_semigroup, discriminant_surface, enumerate_characteristics,
    jacobian_polygon, merle_polygon, parse_poly, parse_roots_file, reduction_criterion,
    resultant_y, tree_polygon, NjpOptions, YPoly,
};

fn bench_discriminant(c: &mut Criterion) {
    let small = parse_poly("(y^2-x^3)^2-x^7").unwrap();
    let large = parse_poly("(y^3-x^5)^2-9x^11")
        .unwrap()
        .shear(njp_core::Axis::X, &njp_core::rat::rat(1));
    c.bench_function("discriminant/deg4", |b| {
        b.iter(|| discriminant_surface(black_box(&small)).unwrap())
    });
    c.bench_function("discriminant/deg11-sheared", |b| {
        b.iter(|| discriminant_surface(black_box(&large)).unwrap())
    });
}

fn bench_pipeline(c: &mut Criterion) {
    let opts = NjpOptions::default();
    let kuo = parse_poly("(y^2-x^3)^2-x^7").unwrap();
    let heavy = parse_poly("(1+x)*((y^3-x^5)^2-9x^11)").unwrap();
    c.bench_function("njp/kuo", |b| {
        b.iter(|| jacobian_polygon(black_box(&kuo), &opts).unwrap())
    });
    c.bench_function("njp/unit-times-deg11", |b| {
        b.iter(|| jacobian_polygon(black_box(&heavy), &opts).unwrap())
    });
}

fn bench_resultant(c: &mut Criterion) {
    let f = YPoly::from_bipoly(&parse_poly("(y^2-x^3)^2-4x^5y-x^7").unwrap()).unwrap();
    let g = YPoly::from_bipoly(&parse_poly("y^2-x^3").unwrap()).unwrap();
    c.bench_function("resultant/bareiss-6x6", |b| {
        b.iter(|| resultant_y(black_box(&f), black_box(&g)))
    });
}

fn bench_criteria(c: &mut Criterion) {
    let chars = enumerate_characteristics(18, 40);
    let polygons: Vec<_> = chars
        .iter()
        .map(|ch| merle_polygon(&char_to_semigroup(ch)))
        .collect();
    c.bench_function("criteria/reduction-over-merle-corpus", |b| {
        b.iter(|| {
            for p in &polygons {
                assert!(reduction_criterion(black_box(p)).passed());
            }
        })
    });
}

fn bench_tree(c: &mut Criterion) {
    let text = std::fs::read_to_string(format!(
        "{}/../../data/example1_g_roots.json",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap();
    let roots = parse_roots_file(&text).unwrap();
    c.bench_function("tree/build-and-read", |b| {
        b.iter(|| tree_polygon(&build_tree(black_box(&roots)).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_discriminant,
    bench_pipeline,
    bench_resultant,
    bench_criteria,
    bench_tree
);
criterion_main!(benches);
