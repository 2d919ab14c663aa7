//! Chern-number and Milnor-number values checked against formulas that
//! share no code with the library routes.

use logdiv::chow::{complete_symmetric, log_chern_class, snc_log_chern_class, twisted_top_chern};
use logdiv::milnor::{certify_points, local_milnor, milnor_orlik_oracle, milnor_total, Chart};
use logdiv::poly::{rat, ratio};
use logdiv::{parse_poly, HomogPoly, Rat, Vars};
use num_bigint::BigInt;

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficient of `h^n` in `(1-h)^{n+1} / prod (1 - d_j h)`, expanded as a
/// plain triple sum over the product of the series.
fn series_top(n: i64, degrees: &[i64]) -> BigInt {
    let mut total = BigInt::from(0);
    match degrees {
        [d] => {
            for i in 0..=n {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                total += binom(n + 1, i) * sign * BigInt::from(*d).pow((n - i) as u32);
            }
        }
        [d1, d2] => {
            for i in 0..=n {
                for j in 0..=n - i {
                    let k = n - i - j;
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    total += binom(n + 1, i) * sign * BigInt::from(*d1).pow(j as u32) * BigInt::from(*d2).pow(k as u32);
                }
            }
        }
        _ => unreachable!(),
    }
    total
}

fn enumerate_sigma(k: u32, a: i64, b: i64) -> BigInt {
    (0..=k)
        .map(|i| BigInt::from(a).pow(i) * BigInt::from(b).pow(k - i))
        .sum()
}

fn as_big(r: &Rat) -> BigInt {
    assert!(r.is_integer());
    r.to_integer()
}

#[test]
fn two_divisor_coefficient_is_sigma_n() {
    for n in 2..=8i64 {
        for d1 in 1..=9i64 {
            for d2 in 1..=9i64 {
                let direct = as_big(
                    &log_chern_class(n as usize, &[d1 as u32, d2 as u32])
                        .unwrap()
                        .integrate(),
                );
                assert_eq!(direct, series_top(n, &[d1, d2]), "n={n} d=({d1},{d2})");
                let sigma = complete_symmetric(n as usize, &[rat(d1 - 1), rat(d2 - 1)]);
                assert_eq!(as_big(&sigma), direct, "n={n} d=({d1},{d2})");
                assert_eq!(enumerate_sigma(n as u32, d1 - 1, d2 - 1), direct);
            }
        }
    }
}

#[test]
fn single_divisor_coefficient_is_signed_twisted_top() {
    for n in 2..=8usize {
        for d in 1..=9i64 {
            let direct = as_big(&log_chern_class(n, &[d as u32]).unwrap().integrate());
            assert_eq!(direct, series_top(n as i64, &[d]));
            let twisted = as_big(&twisted_top_chern(n, d).unwrap());
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(direct, twisted * sign, "n={n} d={d}");
        }
    }
}

#[test]
fn printed_sigma_sum_probe() {
    let direct = as_big(&log_chern_class(2, &[1, 1]).unwrap().integrate());
    let printed: Rat = (0..=2).map(|i| complete_symmetric(2 - i, &[rat(0), rat(0)])).sum();
    assert_eq!(direct, BigInt::from(0));
    assert_eq!(printed, rat(1));
}

#[test]
fn snc_class_matches_two_divisor_class() {
    for n in 2..=6usize {
        for d1 in 1..=4u32 {
            for d2 in 1..=4u32 {
                assert_eq!(
                    snc_log_chern_class(n, &[d1, d2]).unwrap(),
                    log_chern_class(n, &[d1, d2]).unwrap()
                );
            }
        }
    }
}

#[test]
fn a_k_series_matches_weighted_oracle() {
    let v = Vars::new(["x", "y", "z"]);
    let origin = vec![rat(0); 3];
    for k in 1..=5i64 {
        let f = parse_poly(&format!("x^{} + y^2 + z^2", k + 1), &v).unwrap();
        let oracle = milnor_orlik_oracle(&[rat(1), ratio(k + 1, 2), ratio(k + 1, 2)], &rat(k + 1)).unwrap();
        assert_eq!(rat(local_milnor(&f, &origin).unwrap() as i64), oracle);
    }
}

#[test]
fn weighted_homogeneous_families_match_oracle() {
    let v2 = Vars::new(["x", "y"]);
    let v3 = Vars::new(["x", "y", "z"]);
    // ordinary m-fold points: m distinct lines
    for m in 2..=5i64 {
        let lines: Vec<String> = (0..m).map(|i| format!("(x - {}*y)", i)).collect();
        let f = parse_poly(&lines.join("*"), &v2).unwrap();
        let oracle = milnor_orlik_oracle(&[rat(1), rat(1)], &rat(m)).unwrap();
        assert_eq!(rat(local_milnor(&f, &[rat(0), rat(0)]).unwrap() as i64), oracle);
    }
    // Brieskorn-Pham x^a + y^b + z^c
    for (a, b, c) in [(2, 3, 4), (3, 3, 3), (2, 4, 5), (3, 4, 2)] {
        let f = parse_poly(&format!("x^{a} + y^{b} + z^{c}"), &v3).unwrap();
        let d = rat(a * b * c);
        let w = [rat(b * c), rat(a * c), rat(a * b)];
        let oracle = milnor_orlik_oracle(&w, &d).unwrap();
        assert_eq!(rat(local_milnor(&f, &[rat(0), rat(0), rat(0)]).unwrap() as i64), oracle);
    }
    // E_6, E_8 normal forms
    for (text, mu) in [("x^3 + y^4", 6), ("x^3 + y^5", 8), ("x^2*y + y^4", 5)] {
        let f = parse_poly(text, &v2).unwrap();
        assert_eq!(local_milnor(&f, &[rat(0), rat(0)]).unwrap(), mu, "{text}");
    }
}

fn p3() -> Vars {
    Vars::numbered("x", 4)
}

fn pts(list: &[[i64; 4]]) -> Vec<Vec<Rat>> {
    list.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect()
}

#[test]
fn milnor_routes_agree_on_certified_fixtures() {
    let cases: Vec<(&str, Vec<Vec<Rat>>, Option<Chart>)> = vec![
        ("x0*x1 - x2^2", pts(&[[0, 0, 0, 1]]), None),
        (
            "x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3",
            pts(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
            Some(Chart::Linear(vec![rat(1), rat(1), rat(1), rat(1)])),
        ),
        // A_2 at [0:0:0:1], smooth Fermat curve at infinity
        ("x0^3 + x1^2*x3 + x2^2*x3 + x1^3 + x2^3", pts(&[[0, 0, 0, 1]]), None),
        ("x0^4 + x1^2*x3^2 + x2^2*x3^2 + x1^4 + x2^4", pts(&[[0, 0, 0, 1]]), None),
        ("x0^2 + x1^2 + x2^2 + x3^2", vec![], None),
    ];
    for (eq, points, chart) in cases {
        let f = HomogPoly::parse(eq, &p3()).unwrap();
        let report = certify_points(&f, &points, chart.as_ref()).unwrap();
        assert!(
            report.certified_complete,
            "{eq}: {} vs {}",
            report.per_point_total(),
            report.total
        );
        if chart.is_none() {
            assert_eq!(milnor_total(&f, None).unwrap().0, report.total);
        }
    }
}

#[test]
fn a_k_projective_cones() {
    for k in 1..=4u32 {
        let eq = format!("x0^{0} + x1^2*x3^{1} + x2^2*x3^{1} + x1^{0} + x2^{0}", k + 1, k - 1);
        let f = HomogPoly::parse(&eq, &p3()).unwrap();
        let r = certify_points(&f, &pts(&[[0, 0, 0, 1]]), None).unwrap();
        assert_eq!(r.per_point[0].local_milnor, k as usize);
        assert_eq!(r.total, k as usize, "{eq}");
    }
}
