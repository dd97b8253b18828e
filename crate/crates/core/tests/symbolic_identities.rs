use nco_core::opalg::named::*;
use nco_core::opalg::*;
use nco_core::verify::{verify_commutators, verify_expansion, CheckKind, Status};
use proptest::prelude::*;

/// Independent normal-ordering oracle: a word of atomic factors is rewritten
/// by single adjacent swaps, `p_i x_i -> x_i p_i - i hbar`, and plain swaps of
/// commuting neighbours, until it is sorted positions-first.
fn oracle_normal_order(word: &[CanonicalOp]) -> OperatorPolynomial {
    let mut pending: Vec<(GaussianRational, i32, Vec<CanonicalOp>)> = vec![(GaussianRational::integer(1), 0, word.to_vec())];
    let mut out = OperatorPolynomial::zero();
    while let Some((c, hbar, w)) = pending.pop() {
        let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) else {
            let mut exps = OpExponents::IDENTITY;
            for op in &w {
                exps.0[op.index()] += 1;
            }
            out.add_term(c, SymbolExponents::single(Symbol::Hbar, hbar), exps);
            continue;
        };
        let (a, b) = (w[k], w[k + 1]);
        let mut swapped = w.clone();
        swapped.swap(k, k + 1);
        pending.push((c.clone(), hbar, swapped));
        if !a.is_position() && b.is_position() && a.component() == b.component() {
            let mut contracted = w[..k].to_vec();
            contracted.extend_from_slice(&w[k + 2..]);
            pending.push((&c * &(-GaussianRational::i()), hbar + 1, contracted));
        }
    }
    out
}

fn word_poly(word: &[CanonicalOp]) -> OperatorPolynomial {
    word.iter().fold(OperatorPolynomial::one(), |acc, &op| acc.product(&OperatorPolynomial::op(op)))
}

fn arb_word(max_len: usize) -> impl Strategy<Value = Vec<CanonicalOp>> {
    prop::collection::vec(prop::sample::select(CanonicalOp::ALL.to_vec()), 0..=max_len)
}

fn arb_coeff() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3, 1i64..=3, -3i64..=3).prop_map(|(a, b, c)| GaussianRational::ratio(a, b) + &GaussianRational::integer(c) * &GaussianRational::i())
}

fn arb_symbols() -> impl Strategy<Value = SymbolExponents> {
    prop::array::uniform7(-1i32..=1).prop_map(SymbolExponents)
}

fn arb_poly() -> impl Strategy<Value = OperatorPolynomial> {
    prop::collection::vec((arb_coeff(), arb_symbols(), arb_word(3)), 0..4).prop_map(|terms| {
        terms.into_iter().fold(OperatorPolynomial::zero(), |acc, (c, s, w)| acc + word_poly(&w).scale(&c, s))
    })
}

#[test]
fn oracle_agrees_on_angular_momentum_products() {
    use CanonicalOp::*;
    let ab = (x() * py()).product(&(y() * px()));
    let ba = (y() * px()).product(&(x() * py()));
    assert_eq!(ab, oracle_normal_order(&[X, Py, Y, Px]));
    assert_eq!(ba, oracle_normal_order(&[Y, Px, X, Py]));
    let diff = oracle_normal_order(&[X, Py, Y, Px]) - oracle_normal_order(&[Y, Px, X, Py]);
    assert_eq!(ab - ba, diff);
    // [x p_y, y p_x] = x [p_y, y] p_x + y [x, p_x] p_y = i hbar (y p_y - x p_x)
    let expected = (y() * py() - x() * px()).scale(&GaussianRational::i(), SymbolExponents::single(Symbol::Hbar, 1));
    assert_eq!(diff, expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_swap_oracle(w in arb_word(6)) {
        prop_assert_eq!(word_poly(&w), oracle_normal_order(&w));
    }

    #[test]
    fn product_is_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
    }

    #[test]
    fn product_is_bilinear(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.product(&(b.clone() + c.clone())), a.product(&b) + a.product(&c));
    }

    #[test]
    fn commutator_is_antisymmetric(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(commutator(&a, &b), -commutator(&b, &a));
        prop_assert!(commutator(&a, &a).is_zero());
    }

    #[test]
    fn jacobi_identity(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let j = commutator(&a, &commutator(&b, &c))
            + commutator(&b, &commutator(&c, &a))
            + commutator(&c, &commutator(&a, &b));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn adjoint_is_an_involution(a in arb_poly()) {
        prop_assert_eq!(adjoint(&adjoint(&a)), a);
    }

    #[test]
    fn adjoint_reverses_products(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(adjoint(&a.product(&b)), adjoint(&b).product(&adjoint(&a)));
    }

    #[test]
    fn reassembly_restores_input(a in arb_poly()) {
        let shifted = bopp_shift(&a);
        prop_assert_eq!(reassemble(&collect_orders(&shifted)), shifted);
        prop_assert_eq!(reassemble(&collect_orders(&a)), a);
    }

    #[test]
    fn shift_is_linear(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(bopp_shift(&(a.clone() + b.clone())), bopp_shift(&a) + bopp_shift(&b));
    }
}

#[test]
fn hamiltonian_is_self_adjoint() {
    let h = hamiltonian();
    assert_eq!(adjoint(&h), h);
    assert_eq!(adjoint(&bopp_shift(&h)), bopp_shift(&h));
    for l in [lx(), ly(), lz()] {
        assert_eq!(adjoint(&l), l);
    }
}

#[test]
fn shifted_coordinate_commutators() {
    let checks = verify_commutators();
    assert_eq!(checks.len(), 9 + 9 + 9 + 3);
    for c in &checks {
        assert_eq!(c.status, Status::Match, "{}: residual {}", c.name, c.residual);
    }
}

#[test]
fn off_diagonal_mixed_commutators_are_second_order() {
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let c = commutator(
                &bopp_shift(&OperatorPolynomial::op(CanonicalOp::position(i))),
                &bopp_shift(&OperatorPolynomial::op(CanonicalOp::momentum(j))),
            );
            for m in c.iter() {
                assert_eq!((m.symbols[Symbol::Theta], m.symbols[Symbol::Eta]), (1, 1), "{c}");
                assert!(m.ops.degree() == 0);
            }
        }
    }
}

#[test]
fn expansion_report() {
    let checks = verify_expansion();
    let status = |name: &str| checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("{name}")).status;
    for name in ["L_z", "p^2", "x^2+y^2", "z^2", "H_0", "H_eta", "H_theta", "H_eta^2", "H_theta^2", "reassembly", "H0 symmetric gauge"] {
        assert_eq!(status(name), Status::Match, "{name}");
    }
    let cross = checks.iter().find(|c| c.name == "H_eta_theta").unwrap();
    assert_eq!(cross.status, Status::Mismatch);
    // engine gives -omega_c/(8 alpha^2) (L_x+L_y+L_z); residual is twice that
    let expected = l_sum() * scalar(-1, 4, &[(Symbol::OmegaC, 1), (Symbol::Alpha, -2)]);
    assert_eq!(cross.residual, expected);
    assert!(checks.iter().all(|c| !c.is_violation()));
    assert_eq!(checks.iter().filter(|c| c.kind == CheckKind::Reference).count(), 10);
}
