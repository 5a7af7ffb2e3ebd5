//! Independent routes to the values the library computes.

use std::collections::BTreeSet;

use c4free_core::fa::{build_fa, fa_constant, l_roots, verify_splitting};
use c4free_core::planar::{
    char3_exponent, extension_of, is_planar, monomial, predict_monomial_char3,
    predict_monomial_qa1, witness_holds,
};
use c4free_core::verify::{
    count_pair_solutions_bruteforce, count_triangles_bruteforce, count_triangles_explicit,
    count_triangles_symbolic, pair_count_from_roots,
};
use c4free_core::*;

fn cubic(q: u64) -> FieldCtx {
    FieldCtx::cubic_extension(q).unwrap()
}

fn outside_subfield(f: &FieldCtx) -> Vec<FieldElem> {
    f.units().filter(|a| !f.in_subfield(a).unwrap()).collect()
}

#[test]
fn smallest_modulus_by_brute_enumeration() {
    // the first monic cubic over F_3 (by encoding) with no root in F_3
    let f = cubic(3);
    let first = (0u64..27)
        .map(|low| [low % 3, low / 3 % 3, low / 9, 1])
        .find(|m| (0..3).all(|x| (m[0] + m[1] * x + m[2] * x * x + x * x * x) % 3 != 0))
        .unwrap();
    assert_eq!(f.modulus(), first);
}

#[test]
fn constraint_forms_agree_with_direct_evaluation() {
    for q in [3u64, 5] {
        let f = cubic(q);
        let mut literal_disagrees = false;
        for a in f.units() {
            let b = f.inv(&a).unwrap();
            let pw = |e: u64| f.pow(&b, e);
            let cg = f.sub(&f.mul(&a, &fa_constant(&f, &a).unwrap()), &f.one());
            // b^{q^2} + b^q - b^{q^2+q-1} - 1
            let expanded = f.sub(
                &f.sub(&f.add(&pw(q * q), &pw(q)), &pw(q * q + q - 1)),
                &f.one(),
            );
            assert_eq!(cg.is_zero(), expanded.is_zero());
            let literal = f.sub(
                &f.add(&f.add(&pw(q * q + q - 1), &pw(q * q)), &pw(q)),
                &f.one(),
            );
            literal_disagrees |= cg.is_zero() != literal.is_zero();
            // f_a(-1) = 0 iff b is a root of X^{q^2+q} - X^{q^2+1} - X^{q+1} + 2X - 1
            let at_minus_one = fa_constant(&f, &a)
                .map(|c| f.add(&f.sub(&f.one(), &f.scale(2, &b)), &c))
                .unwrap();
            let r = f.sub(
                &f.add(
                    &f.sub(&f.sub(&pw(q * q + q), &pw(q * q + 1)), &pw(q + 1)),
                    &f.scale(2, &b),
                ),
                &f.one(),
            );
            assert_eq!(at_minus_one.is_zero(), r.is_zero());
            let poly_route = fa::fa_poly(&f, &a).unwrap().eval(&f.from_int(-1)).unwrap();
            assert_eq!(poly_route, at_minus_one);
        }
        // a = 1 has cg = 0, which the literal form misses
        assert!(literal_disagrees);
    }
}

#[test]
fn parameter_counts_q3() {
    let f = cubic(3);
    let candidates = outside_subfield(&f);
    assert_eq!(candidates.len(), 24);
    let mut eq_zero = 0;
    let mut minus_one = 0;
    for a in &candidates {
        match constraint_check(&f, a) {
            Err(ConstraintViolation::ConstraintEqZero) => eq_zero += 1,
            Err(ConstraintViolation::MinusOneIsRoot) => minus_one += 1,
            Err(ConstraintViolation::SubfieldElement) => unreachable!(),
            Ok(()) => {}
        }
    }
    assert_eq!((eq_zero, minus_one), (0, 0));
    assert_eq!(f.encode(&select_parameter(&f).unwrap()), 3);
}

#[test]
fn selected_parameters() {
    for (q, enc) in [(3u64, 3u64), (5, 5), (7, 7), (9, 3)] {
        let f = cubic(q);
        assert_eq!(f.encode(&select_parameter(&f).unwrap()), enc, "q = {q}");
    }
}

#[test]
fn root_chain_fa_h_l() {
    for q in [3u64, 5] {
        let f = cubic(q);
        for a in outside_subfield(&f)
            .into_iter()
            .step_by(if q == 3 { 1 } else { 7 })
        {
            let objs = build_fa(&f, &a).unwrap();
            let l = objs.l.clone().unwrap();
            let l_plus_one = l.add(&Poly::constant(&f, f.one())).unwrap();
            let roots = objs.fa.roots_with_multiplicity().unwrap();
            assert_eq!(roots.len() as u64, q + 1);
            for (r, m) in roots {
                assert_eq!(m, 1);
                let x = f.sub(&r, &objs.canonical_root);
                if x.is_zero() {
                    continue;
                }
                assert!(objs.h.eval(&x).unwrap().is_zero());
                let inv = f.inv(&x).unwrap();
                assert!(l_plus_one.eval(&inv).unwrap().is_zero());
            }
            // L roots: formula set equals scanned kernel
            let formula: BTreeSet<u64> = l_roots(&f, &a)
                .unwrap()
                .iter()
                .map(|x| f.encode(x))
                .collect();
            let scanned: BTreeSet<u64> = f
                .elements()
                .filter(|x| l.eval(x).unwrap().is_zero())
                .map(|x| f.encode(&x))
                .collect();
            assert_eq!(formula, scanned);
            assert_eq!(formula.len() as u64, q);
        }
    }
}

#[test]
fn shift_identity_by_pointwise_evaluation() {
    // f_a(X + c) = X h(X) checked pointwise, independent of Poly::shift
    let f = cubic(3);
    for a in f.units() {
        let objs = build_fa(&f, &a).unwrap();
        for x in f.elements() {
            let lhs = objs.fa.eval(&f.add(&x, &objs.canonical_root)).unwrap();
            let rhs = f.mul(&x, &objs.h.eval(&x).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn splitting_over_f729() {
    let f = cubic(9);
    for a in f.units().step_by(13) {
        assert!(verify_splitting(&f, &a).unwrap().pass);
    }
}

#[test]
fn pair_count_exact_for_every_valid_a() {
    for q in [3u64, 5] {
        let f = cubic(q);
        for a in outside_subfield(&f) {
            let spec = GraphSpec::new(&f, &a).unwrap();
            let brute = count_pair_solutions_bruteforce(&spec);
            assert_eq!(brute, pair_count_from_roots(&spec).unwrap());
            assert_eq!(brute, (q + 1) * (q * q * q - 1));
        }
    }
}

#[test]
fn pair_solutions_are_root_ratios() {
    let f = cubic(3);
    let spec = GraphSpec::default_for(&f).unwrap();
    let fa = fa::fa_poly(&f, &spec.a()).unwrap();
    let cf = spec.coefficient(Layer::AB);
    let cg = spec.coefficient(Layer::BC);
    let mut ratios = BTreeSet::new();
    for z1 in f.units() {
        for z2 in f.units() {
            let z3 = f.neg(&f.add(&z1, &z2));
            let p = |z: &FieldElem| f.pow(z, 4);
            let sum = f.add(&f.add(&f.mul(&cf, &p(&z1)), &f.mul(&cg, &p(&z2))), &p(&z3));
            if sum.is_zero() {
                assert!(!z3.is_zero());
                let xi = f.div(&z1, &z2).unwrap();
                assert!(fa.eval(&xi).unwrap().is_zero());
                ratios.insert(f.encode(&xi));
            }
        }
    }
    assert_eq!(ratios.len(), 4);
}

#[test]
fn bruteforce_triangles_for_several_parameters() {
    let f = cubic(3);
    for a in outside_subfield(&f).into_iter().take(3) {
        let spec = GraphSpec::new(&f, &a).unwrap();
        let symbolic = count_triangles_symbolic(&spec).unwrap();
        assert_eq!(symbolic, 75_816);
        assert_eq!(count_triangles_bruteforce(&spec).unwrap(), symbolic);
    }
}

#[test]
fn explicit_triangle_count_matches_symbolic() {
    let f = cubic(3);
    let spec = GraphSpec::default_for(&f).unwrap();
    let g = spec.materialize().unwrap();
    assert_eq!(count_triangles_explicit(&g), 75_816);
}

#[test]
fn monomial_criterion_against_definition() {
    for q in [3u64, 5] {
        for e in 1..=3u32 {
            if q.pow(e) > 343 {
                continue;
            }
            let field = extension_of(q, e).unwrap();
            for alpha in 1..=3u32 {
                let x = monomial(&field, q.pow(alpha) + 1);
                let report = is_planar(&x);
                assert_eq!(
                    report.is_planar,
                    predict_monomial_qa1(q, alpha, e).unwrap(),
                    "q={q} alpha={alpha} e={e}"
                );
                if let Some(w) = report.witness {
                    assert!(witness_holds(&x, &w));
                }
            }
        }
    }
}

#[test]
fn char3_criterion_against_definition() {
    for e in 1..=3u32 {
        let field = extension_of(3, e).unwrap();
        for alpha in [1u32, 3, 5] {
            let x = monomial(&field, char3_exponent(alpha).unwrap());
            assert_eq!(
                is_planar(&x).is_planar,
                predict_monomial_char3(alpha, e).unwrap(),
                "alpha={alpha} e={e}"
            );
        }
    }
}

#[test]
fn construction_layers_planar_q3_q5() {
    for q in [3u64, 5] {
        let f = cubic(q);
        let spec = GraphSpec::default_for(&f).unwrap();
        for layer in Layer::ALL {
            let c = spec.coefficient(layer);
            let p = Poly::monomial(&f, c, (q + 1) as usize);
            assert!(is_planar(&p).is_planar, "q={q} {layer:?}");
        }
    }
}
