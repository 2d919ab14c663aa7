use criterion::{black_box, criterion_group, criterion_main, Criterion};
use logdiv::chow::log_chern_class;
use logdiv::gb::{groebner, mora_standard_basis};
use logdiv::milnor::{local_milnor, milnor_total};
use logdiv::poly::rat;
use logdiv::theorems::verify_gauss_bonnet;
use logdiv::MonOrder;
use logdiv_bench::*;

fn bench_bases(c: &mut Criterion) {
    let f = affine("x^3 + y^4 + z^2");
    let jac: Vec<_> = (0..3).map(|i| f.derivative(i)).collect();
    c.bench_function("groebner_grevlex_jacobian", |b| {
        b.iter(|| groebner(black_box(&jac), MonOrder::GrevLex).unwrap())
    });
    c.bench_function("groebner_lex_jacobian", |b| {
        b.iter(|| groebner(black_box(&jac), MonOrder::Lex).unwrap())
    });
    c.bench_function("mora_jacobian", |b| {
        b.iter(|| mora_standard_basis(black_box(&jac), MonOrder::NegDegRevLex).unwrap())
    });
}

fn bench_milnor(c: &mut Criterion) {
    let origin = vec![rat(0); 3];
    let mut group = c.benchmark_group("local_milnor");
    for (name, text) in GERMS {
        let f = affine(text);
        group.bench_function(name, |b| b.iter(|| local_milnor(black_box(&f), &origin).unwrap()));
    }
    group.finish();

    let cayley = surface(CAYLEY);
    c.bench_function("milnor_total_cayley", |b| {
        b.iter(|| milnor_total(black_box(&cayley), None))
    });
}

fn bench_chow(c: &mut Criterion) {
    c.bench_function("log_chern_class_n8", |b| {
        b.iter(|| log_chern_class(8, black_box(&[5, 7])).unwrap())
    });
}

fn bench_verify(c: &mut Criterion) {
    let spec = plane_nodal_cubic();
    c.bench_function("verify_gauss_bonnet_nodal_cubic", |b| {
        b.iter(|| verify_gauss_bonnet(black_box(&spec)).unwrap())
    });
}

criterion_group!(benches, bench_bases, bench_milnor, bench_chow, bench_verify);
criterion_main!(benches);
