use super::*;
use crate::chebrec::lewanowicz;
use crate::scalar::Surd;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn exp_rec() -> RecOp {
    RecOp::from_i64_table(0, &[&[-1], &[2, 2], &[1]])
}

#[test]
fn quadrature_of_t3() {
    let c = cheb_coeffs(|x| 4.0 * x * x * x - 3.0 * x, 16, 64).unwrap();
    for (n, v) in c.iter().enumerate() {
        let want = if n == 3 { 1.0 } else { 0.0 };
        assert!((v - want).abs() < 1e-14, "c_{n} = {v}");
    }
    assert!(cheb_coeffs(f64::exp, 3, 64).is_err());
    assert!(matches!(
        cheb_coeffs(|x| if x.abs() < 1e-9 { f64::NAN } else { x }, 8, 17),
        Err(Error::NonFinite { node: 8, .. })
    ));
}

#[test]
fn quadrature_matches_closed_forms() {
    for name in ["exp", "arctan", "erf"] {
        let f = lookup(name).unwrap();
        let c = cheb_coeffs(f.eval, 24, f.nodes).unwrap();
        let k = f.known_coeffs.unwrap();
        for (n, v) in c.iter().enumerate() {
            assert!((v - k(n)).abs() < 1e-14, "{name} c_{n}: {v} vs {}", k(n));
        }
    }
    let f = lookup("arccos").unwrap();
    let c = cheb_coeffs(f.eval, 16, f.nodes).unwrap();
    assert!((c[0] - PI).abs() < 1e-9 && c[2].abs() < 1e-12);
    assert!((c[1] + 4.0 / PI).abs() < 1e-9);
    let c = cheb_coeffs(f64::exp, 8, 64).unwrap();
    assert!(rel(c[1], 1.130318207984970).abs() < 1e-12);
}

#[test]
fn doubling_nodes_is_stable() {
    for f in catalog().iter().filter(|f| ["exp", "arctan", "erf"].contains(&f.name)) {
        let a = cheb_coeffs(f.eval, 64, 128).unwrap();
        let b = cheb_coeffs(f.eval, 64, 256).unwrap();
        for n in 0..=32 {
            assert!((a[n] - b[n]).abs() < 1e-10, "{} c_{n}", f.name);
        }
    }
}

#[test]
fn parity_of_catalog_coefficients() {
    for f in catalog() {
        let c = catalog_coeffs(&f, 64).unwrap();
        let Some(par) = f.parity else { continue };
        let skip = match par {
            Parity::Odd => 0,
            Parity::Even => 1,
        };
        for v in c.iter().skip(skip).step_by(2) {
            assert!(v.abs() < 1e-12, "{}", f.name);
        }
    }
}

#[test]
fn clenshaw() {
    let c = cheb_coeffs(f64::exp, 32, 64).unwrap();
    assert!((truncated_eval(&c, 0.0) - 1.0).abs() < 1e-14);
    assert!((truncated_eval(&c, 0.3) - 0.3f64.exp()).abs() < 1e-14);
    let f = lookup("arccos").unwrap();
    let c = cheb_coeffs(f.eval, 64, f.nodes).unwrap();
    assert!((truncated_eval(&c, 0.0) - PI / 2.0).abs() < 1e-9);
    let mut e5 = vec![0.0; 6];
    e5[5] = 1.0;
    for theta in [0.1, 0.7, 2.0] {
        assert!((truncated_eval(&e5, f64::cos(theta)) - (5.0 * theta).cos()).abs() < 1e-13);
    }
}

#[test]
fn exp_recurrence_and_negative_control() {
    let c = cheb_coeffs(f64::exp, 64, 128).unwrap();
    let rep = verify_annihilation(&exp_rec(), &c, 1, 1e-8).unwrap();
    assert!(rep.pass, "{rep:?}");
    assert!(rep.checked >= 5);
    let mut bad = exp_rec();
    bad = &bad + &RecOp::one();
    let rep = verify_annihilation(&bad, &c, 1, 1e-8).unwrap();
    assert!(!rep.pass);
    assert!(matches!(
        verify_annihilation(&exp_rec(), &c[..2], 1, 1e-8),
        Err(Error::EmptyWindow)
    ));
}

#[test]
fn symmetric_extension_at_zero() {
    // The centered exp recurrence at n = 0 reads c_{-1} = c_1.
    let c: Vec<f64> = (0..10).map(|n| 2.0 * bessel_i(n, 1.0)).collect();
    let centered = RecOp::from_i64_table(-1, &[&[-1], &[0, 2], &[1]]);
    let v = crate::ore::rec_apply_at(&centered, &c, 0).unwrap();
    assert!(v.abs() < 1e-15);
}

#[test]
fn every_catalog_function_and_algorithm_verifies() {
    for f in catalog() {
        let tol = if f.name == "arccos" { 1e-6 } else { 1e-8 };
        for algo in Algorithm::ALL {
            let rep = verify_function(&f, algo, 64, tol).unwrap();
            assert!(rep.annihilation.pass, "{} {algo}: {:?}", f.name, rep.annihilation);
        }
    }
}

#[test]
fn arctanh_forward_exact() {
    let op = lewanowicz(&lookup("arctanh").unwrap().operator()).unwrap().operator;
    let init = [BigRat::zero(), BigRat::from_i64(2)];
    let sol = solve_forward(&op, &init, 41).unwrap();
    for k in 0..=20 {
        assert_eq!(sol.values[2 * k + 1], BigRat::frac(2, 2 * k as i64 + 1));
        assert!(sol.values[2 * k].is_zero());
    }
    let fsol = solve_forward(&op, &[0.0, 2.0], 41).unwrap();
    assert!(!fsol.unstable);
    for k in 0..=20 {
        assert!(rel(fsol.values[2 * k + 1], 2.0 / (2 * k + 1) as f64) < 1e-10);
    }
}

#[test]
fn arctan_forward_in_quadratic_field() {
    let f = lookup("arctan").unwrap();
    let op = compute(Algorithm::Paszkowski, &f.operator()).unwrap().operator;
    let z = Surd::rational(BigRat::zero(), 2);
    let c1 = Surd::new(BigRat::from_i64(-2), BigRat::from_i64(2), 2);
    let c3 = Surd::new(BigRat::frac(14, 3), BigRat::frac(-10, 3), 2);
    let sol = solve_forward(&op, &[z.clone(), c1, z.clone(), c3], 31).unwrap();
    let known = f.known_coeffs.unwrap();
    for k in 0..=15 {
        let n = 2 * k + 1;
        assert!(rel(sol.values[n].to_f64(), known(n)) < 1e-10, "k = {k}");
        assert!(sol.values[n - 1].is_zero());
    }
    // The same recursion in double precision is dominated by the growing
    // solution.
    let init: Vec<f64> = [0, 1, 2, 3].map(known).to_vec();
    let fsol = solve_forward(&op, &init, 31).unwrap();
    assert!(fsol.unstable);
}

#[test]
fn quarter_power_forward() {
    let f = lookup("quarter").unwrap();
    let op = lewanowicz(&f.operator()).unwrap().operator;
    let known = f.known_coeffs.unwrap();
    let sol = solve_forward(&op, &[known(0), 0.0], 40).unwrap();
    for n in (0..=40).step_by(2) {
        assert!(rel(sol.values[n], known(n)) < 1e-12, "n = {n}");
    }
    let c = cheb_coeffs(f.eval, 8, 1 << 16).unwrap();
    assert!(rel(c[0], known(0)) < 1e-2);
}

#[test]
fn singular_leading_coefficient() {
    // n·c_{n+1} - c_n: leading coefficient vanishes at n = 0.
    let op = RecOp::from_i64_table(0, &[&[-1], &[0, 1]]);
    assert!(matches!(
        solve_forward(&op, &[1.0], 5),
        Err(Error::SingularLeading { index: 0 })
    ));
    assert!(solve_forward(&op, &[1.0, 2.0], 5).is_err());
}

#[test]
fn lookup_errors() {
    assert!(matches!(lookup("sinc"), Err(Error::UnknownFunction(_))));
    assert_eq!(lookup(" ERF ").unwrap().name, "erf");
}
