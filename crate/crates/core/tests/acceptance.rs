//! Acceptance criteria 1-9. One PASS/FAIL line per criterion; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use superschur::commutant::double_centralizer_report;
use superschur::grassmann::GrassmannElement;
use superschur::matrix::Matrix;
use superschur::random;
use superschur::scalar::{Parity, Scalar};
use superschur::supermatrix::{one_param_e, GlElement, SuperDim, SuperMatrix};
use superschur::tableaux::{count_ssyt, count_syt, enumerate_ssyt, partitions, Partition};
use superschur::tensor::{
    rho_group, tau_closed_form, tau_permutation_via, theta_at_point, theta_derivation_with, words, BasisWord,
    Decomposition, OddCount, Permutation, TensorOperator,
};

fn dim(m: usize, n: usize) -> SuperDim {
    SuperDim::new(m, n).unwrap()
}

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn filling_strings(parts: &[usize], m: usize, n: usize) -> Vec<String> {
    let mut out: Vec<String> = enumerate_ssyt(&shape(parts), m, n).iter().map(|f| f.to_string()).collect();
    out.sort();
    out
}

fn c1() {
    assert_eq!(count_ssyt(&shape(&[2]), 1, 1), 2);
    assert_eq!(count_ssyt(&shape(&[1, 1]), 1, 1), 2);
    assert_eq!(filling_strings(&[2], 1, 1), vec!["t1,t1", "t1,u1"]);
    assert_eq!(filling_strings(&[1, 1], 1, 1), vec!["t1\nu1", "u1\nu1"]);
}

fn c2() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for r in 1..=5 {
            let lhs: u64 = partitions(r).iter().map(|p| count_syt(p) * count_ssyt(p, m, n)).sum();
            let rhs = words(dim(m, n), r).unwrap().count() as u64;
            assert_eq!(rhs, ((m + n) as u64).pow(r as u32));
            assert_eq!(lhs, rhs, "gl({m}|{n}) r={r}");
        }
    }
}

fn c3() {
    for (m, n, r) in [(1, 1, 2), (1, 1, 3), (2, 1, 2), (2, 0, 2), (2, 0, 3)] {
        let report = double_centralizer_report(m, n, r, 64).unwrap();
        assert!(report.centralizer_of_tau_is_theta, "C(τ) = θ fails for ({m},{n},{r})");
        assert!(report.centralizer_of_theta_is_tau, "C(θ) = τ fails for ({m},{n},{r})");
        assert_eq!(report.dim_tau as u64, report.expected_dim_tau, "dim τ for ({m},{n},{r})");
        assert_eq!(report.dim_theta as u64, report.expected_dim_theta, "dim θ for ({m},{n},{r})");
        if (m, n, r) == (1, 1, 2) {
            assert_eq!((report.dim_tau, report.dim_theta), (2, 8));
        }
    }
}

/// Number of elementary pairs on which `θ([X,Y]) = [θX, θY]` fails.
fn theta_failures(d: SuperDim, r: usize, convention: OddCount) -> usize {
    let basis = GlElement::elementary_basis(d);
    let thetas: Vec<_> = basis.iter().map(|x| theta_derivation_with(x, r, convention).unwrap()).collect();
    let mut failures = 0;
    for (x, tx) in basis.iter().zip(&thetas) {
        for (y, ty) in basis.iter().zip(&thetas) {
            let lhs = theta_derivation_with(&x.bracket(y).unwrap(), r, convention).unwrap();
            if lhs != tx.supercommutator(ty, x.parity(), y.parity()).unwrap() {
                failures += 1;
            }
        }
    }
    failures
}

fn c4() {
    for (m, n) in [(1, 1), (2, 1)] {
        for r in 1..=3 {
            assert_eq!(theta_failures(dim(m, n), r, OddCount::Exclusive), 0, "exclusive ({m},{n},{r})");
        }
        for r in 2..=3 {
            assert!(theta_failures(dim(m, n), r, OddCount::Inclusive) > 0, "inclusive should fail ({m},{n},{r})");
        }
    }
}

/// Moves tensor factors one adjacent swap at a time, flipping the sign whenever two odd
/// factors pass each other, until position `k` holds the factor that started at `σ(k)`.
fn koszul_oracle(w: &BasisWord, sigma: &Permutation) -> (bool, Vec<usize>) {
    let r = w.degree();
    let mut items: Vec<(usize, usize, bool)> =
        (0..r).map(|k| (sigma.inverse().apply(k), w.letters()[k], w.letter_parity(k).is_odd())).collect();
    let mut negative = false;
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..r.saturating_sub(1) {
            if items[k].0 > items[k + 1].0 {
                negative ^= items[k].2 && items[k + 1].2;
                items.swap(k, k + 1);
                changed = true;
            }
        }
    }
    (negative, items.iter().map(|it| it.1).collect())
}

fn c5() {
    let d = dim(1, 1);
    for r in [3, 4] {
        for sigma in Permutation::all(r) {
            let adjacent = tau_permutation_via(d, &sigma, Decomposition::Adjacent).unwrap();
            let cycles = tau_permutation_via(d, &sigma, Decomposition::Cycles).unwrap();
            let closed = tau_closed_form(d, &sigma).unwrap();
            assert_eq!(adjacent, cycles, "σ = {sigma:?}");
            assert_eq!(adjacent, closed, "σ = {sigma:?}");
            for w in words(d, r).unwrap() {
                let (negative, letters) = koszul_oracle(&w, &sigma);
                let image = adjacent.image(&w);
                assert_eq!(image.len(), 1);
                assert_eq!(image[0].0.letters(), &letters[..], "σ = {sigma:?}, w = {w}");
                let expected = if negative { -1 } else { 1 };
                assert_eq!(image[0].1, superschur::scalar::q(expected), "σ = {sigma:?}, w = {w}");
            }
        }
    }
}

fn c6() {
    let big_n = 2;
    for (m, n, r) in [(1, 1, 2), (1, 1, 3), (2, 1, 2)] {
        let d = dim(m, n);
        let id = TensorOperator::<GrassmannElement>::identity(d, r, big_n).unwrap();
        for i in 0..d.size() {
            for j in 0..d.size() {
                if d.entry_parity(i, j) != Parity::Odd {
                    continue;
                }
                let x = GlElement::elementary(d, i, j).unwrap();
                for s in 1..=big_n {
                    let alpha = GrassmannElement::generator(big_n, s).unwrap();
                    let lhs = rho_group(&one_param_e(d, i, j, alpha.clone()).unwrap(), r).unwrap();
                    let rhs = id.add(&theta_at_point(&x, &alpha, r).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "({m},{n},{r}) e_{i}{j} ξ{s}");
                }
            }
        }
    }
    for (m, n) in [(1, 1), (2, 1)] {
        let d = dim(m, n);
        let mut rng = random::rng(6);
        for _ in 0..20 {
            let g = random::gl_point(&mut rng, d, 4);
            let h = random::gl_point(&mut rng, d, 4);
            let lhs = rho_group(&g.mul(&h).unwrap(), 2).unwrap();
            let rhs = rho_group(&g, 2).unwrap().mul(&rho_group(&h, 2).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "ρ not multiplicative for ({m},{n})");
        }
    }
}

/// `Ber(g) = det(X)·det(W − Z X⁻¹ Y)⁻¹`, the other Schur complement.
fn berezinian_other_complement(g: &SuperMatrix<GrassmannElement>) -> GrassmannElement {
    let x = g.x_block();
    let x_inv = x.even_inverse().unwrap();
    let complement: Matrix<GrassmannElement> =
        g.w_block().sub(&g.z_block().mul(&x_inv).unwrap().mul(&g.y_block()).unwrap()).unwrap();
    x.even_det().unwrap().mul(&complement.even_det().unwrap().inverse().unwrap())
}

fn c7() {
    let big_n = 4;
    for (m, n) in [(1, 1), (2, 1)] {
        let d = dim(m, n);
        let mut rng = random::rng(7);
        for _ in 0..50 {
            let g = random::gl_point(&mut rng, d, big_n);
            let h = random::gl_point(&mut rng, d, big_n);
            let (bg, bh) = (g.berezinian().unwrap(), h.berezinian().unwrap());
            assert_eq!(g.mul(&h).unwrap().berezinian().unwrap(), bg.mul(&bh));
            assert_eq!(bg, berezinian_other_complement(&g));
        }
        for i in 0..d.size() {
            for j in 0..d.size() {
                if i != j {
                    let x = random::grassmann(&mut rng, big_n, Some(d.entry_parity(i, j)));
                    assert!(one_param_e(d, i, j, x).unwrap().berezinian().unwrap().equals_one());
                }
            }
        }
        let basis = GlElement::elementary_basis(d);
        for x in &basis {
            for y in &basis {
                assert!(x.bracket(y).unwrap().matrix().supertrace().vanishes());
            }
        }
    }
}

fn c8() {
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        let d = dim(m, n);
        let mut rng = random::rng(8);
        for _ in 0..50 {
            let g = random::gl_point(&mut rng, d, 4);
            let f = g.ldu_factor().unwrap();
            assert_eq!(f.product().unwrap(), g);
            let one = SuperMatrix::identity(d, 4);
            assert_eq!(f.upper.x_block(), one.x_block());
            assert_eq!(f.upper.w_block(), one.w_block());
            assert!(f.upper.z_block().is_zero());
            assert_eq!(f.lower.x_block(), one.x_block());
            assert_eq!(f.lower.w_block(), one.w_block());
            assert!(f.lower.y_block().is_zero());
            assert!(f.blockdiag.y_block().is_zero() && f.blockdiag.z_block().is_zero());
        }
    }
}

fn c9() {
    for m in 1..=2 {
        for n in 1..=2 {
            for r in 1..=6 {
                for p in partitions(r) {
                    let c = count_ssyt(&p, m, n);
                    assert!(c == 0 || c >= 2, "gl({m}|{n}) shape {p} has {c} filling");
                }
            }
        }
    }
    for r in 1..=6 {
        assert_eq!(count_ssyt(&shape(&[r]), 1, 0), 1);
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn(), Duration); 9] = [
        ("C1 tableaux counts for gl(1|1), r=2", c1, Duration::from_secs(1)),
        ("C2 sum syt*ssyt = (m+n)^r", c2, Duration::from_secs(30)),
        ("C3 double centralizer", c3, Duration::from_secs(300)),
        ("C4 theta homomorphism, exclusive vs inclusive", c4, Duration::from_secs(30)),
        ("C5 tau decomposition independence", c5, Duration::from_secs(30)),
        ("C6 rho/theta linkage and rho homomorphism", c6, Duration::from_secs(60)),
        ("C7 berezinian and supertrace", c7, Duration::from_secs(60)),
        ("C8 LDU reconstruction", c8, Duration::from_secs(30)),
        ("C9 no one-dimensional tensor representations", c9, Duration::from_secs(30)),
    ];
    let mut failed = Vec::new();
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let pass = result.is_ok() && elapsed < limit;
        println!(
            "{} {name} ({:.2}s, limit {}s)",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if !pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
