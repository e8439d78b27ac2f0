use proptest::prelude::*;

use superschur::grassmann::GrassmannElement;
use superschur::random;
use superschur::scalar::{q, Parity, Scalar};
use superschur::supermatrix::{GlElement, SuperDim};
use superschur::tableaux::{count_ssyt, count_syt, enumerate_ssyt, partitions, Partition, Symbol};
use superschur::tensor::{tau_permutation, theta_derivation, Permutation};

const N: usize = 4;

fn grassmann_strategy() -> impl Strategy<Value = GrassmannElement> {
    prop::collection::vec(-3i64..=3, 1 << N).prop_map(|coeffs| {
        let mut out = GrassmannElement::zero(N);
        for (mask, c) in coeffs.into_iter().enumerate() {
            let gens: Vec<usize> = (0..N).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
            out = out.try_add(&GrassmannElement::monomial(N, &gens, q(c)).unwrap()).unwrap();
        }
        out
    })
}

fn homogeneous(g: &GrassmannElement, odd: bool) -> GrassmannElement {
    let (even, oddp) = g.parity_parts();
    if odd {
        oddp
    } else {
        even
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grassmann_product_is_associative(a in grassmann_strategy(), b in grassmann_strategy(), c in grassmann_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn grassmann_is_supercommutative(a in grassmann_strategy(), b in grassmann_strategy(), pa: bool, pb: bool) {
        let (a, b) = (homogeneous(&a, pa), homogeneous(&b, pb));
        let ba = b.mul(&a);
        prop_assert_eq!(a.mul(&b), ba.signed(pa && pb));
    }

    #[test]
    fn grassmann_inverse_and_body(a in grassmann_strategy(), b in grassmann_strategy()) {
        prop_assert_eq!(a.mul(&b).body(), a.body() * b.body());
        if a.body() != q(0) {
            let inv = a.try_inverse().unwrap();
            prop_assert!(a.mul(&inv).equals_one());
            prop_assert!(inv.mul(&a).equals_one());
        } else {
            prop_assert!(a.try_inverse().is_err());
        }
    }

    #[test]
    fn determinant_and_berezinian_multiply(seed: u64, m in 1usize..=2, n in 1usize..=2) {
        let dim = SuperDim::new(m, n).unwrap();
        let mut rng = random::rng(seed);
        let g = random::gl_point(&mut rng, dim, N);
        let h = random::gl_point(&mut rng, dim, N);
        let gh = g.mul(&h).unwrap();
        prop_assert_eq!(gh.berezinian().unwrap(), g.berezinian().unwrap().mul(&h.berezinian().unwrap()));
        let (x, y) = (g.x_block(), h.x_block());
        prop_assert_eq!(
            x.mul(&y).unwrap().even_det().unwrap(),
            x.even_det().unwrap().mul(&y.even_det().unwrap())
        );
    }

    #[test]
    fn bracket_identities_on_random_elements(seed: u64, px: bool, py: bool) {
        let dim = SuperDim::new(2, 1).unwrap();
        let mut rng = random::rng(seed);
        let parity = |odd| if odd { Parity::Odd } else { Parity::Even };
        let x = random::gl_element(&mut rng, dim, parity(px));
        let y = random::gl_element(&mut rng, dim, parity(py));
        let sign = if px && py { q(1) } else { q(-1) };
        prop_assert_eq!(x.bracket(&y).unwrap(), y.bracket(&x).unwrap().scaled(&sign));
        prop_assert_eq!(x.bracket(&y).unwrap().matrix().supertrace(), q(0));
        let lhs = theta_derivation(&x.bracket(&y).unwrap(), 2).unwrap();
        let tx = theta_derivation(&x, 2).unwrap();
        let ty = theta_derivation(&y, 2).unwrap();
        prop_assert_eq!(lhs, tx.supercommutator(&ty, x.parity(), y.parity()).unwrap());
    }
}

#[test]
fn tau_is_a_right_action_and_involutive_on_transpositions() {
    let dim = SuperDim::new(1, 2).unwrap();
    let perms = Permutation::all(3);
    for s in &perms {
        for p in &perms {
            let lhs = tau_permutation(dim, &s.compose(p).unwrap()).unwrap();
            let rhs = tau_permutation(dim, p).unwrap().mul(&tau_permutation(dim, s).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    let t = tau_permutation(dim, &Permutation::transposition(3, 0, 2).unwrap()).unwrap();
    assert_eq!(t.mul(&t).unwrap(), superschur::tensor::TensorOperator::identity(dim, 3, ()).unwrap());
}

#[test]
fn tau_commutes_with_theta() {
    let dim = SuperDim::new(2, 1).unwrap();
    for sigma in Permutation::all(3) {
        let t = tau_permutation(dim, &sigma).unwrap();
        for x in GlElement::elementary_basis(dim) {
            let th = theta_derivation(&x, 3).unwrap();
            assert_eq!(t.mul(&th).unwrap(), th.mul(&t).unwrap());
        }
    }
}

fn hook_length(shape: &Partition) -> u64 {
    let r = shape.weight() as u64;
    let mut num: u64 = (1..=r).product();
    let mut den = 1u64;
    for (i, j) in shape.cells() {
        let arm = shape.parts()[i] - j - 1;
        let leg = shape.column_len(j) - i - 1;
        den *= (arm + leg + 1) as u64;
    }
    num /= den;
    num
}

#[test]
fn syt_counts_match_hook_length_formula() {
    for r in 1..=8 {
        for p in partitions(r) {
            assert_eq!(count_syt(&p), hook_length(&p), "shape {p}");
        }
    }
    assert_eq!(partitions(6).len(), 11);
    assert_eq!(partitions(4).iter().map(|p| count_syt(p).pow(2)).sum::<u64>(), 24);
}

/// Classical semistandard tableaux: brute force over all fillings by `1..=m`.
fn classical_ssyt_brute(shape: &Partition, m: usize) -> u64 {
    let cells = shape.cells();
    let mut count = 0;
    let total = m.pow(cells.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut grid = vec![vec![0usize; shape.parts()[0]]; shape.len()];
        for &(i, j) in &cells {
            grid[i][j] = c % m;
            c /= m;
        }
        let ok = cells.iter().all(|&(i, j)| {
            (j == 0 || grid[i][j - 1] <= grid[i][j]) && (i == 0 || grid[i - 1][j] < grid[i][j])
        });
        if ok {
            count += 1;
        }
    }
    count
}

#[test]
fn purely_even_and_purely_odd_alphabets_are_classical() {
    for r in 1..=5 {
        for p in partitions(r) {
            for m in 1..=3 {
                assert_eq!(count_ssyt(&p, m, 0), classical_ssyt_brute(&p, m), "shape {p}, m={m}");
                let transpose: Vec<usize> = (0..p.parts()[0]).map(|c| p.column_len(c)).collect();
                let t = Partition::new(transpose).unwrap();
                assert_eq!(count_ssyt(&p, 0, m), classical_ssyt_brute(&t, m), "shape {p}, n={m}");
            }
        }
    }
}

#[test]
fn counts_are_monotone_in_the_alphabet() {
    for r in 1..=5 {
        for p in partitions(r) {
            for m in 0..=2 {
                for n in 0..=2 {
                    let c = count_ssyt(&p, m, n);
                    assert!(count_ssyt(&p, m + 1, n) >= c);
                    assert!(count_ssyt(&p, m, n + 1) >= c);
                }
            }
        }
    }
}

#[test]
fn every_filling_respects_the_ordering_rules() {
    for p in partitions(4) {
        for f in enumerate_ssyt(&p, 2, 1) {
            for (i, j) in p.cells() {
                let s = f.get(i, j);
                if j > 0 {
                    let left = f.get(i, j - 1);
                    assert!(left < s || (left == s && s.is_even()));
                }
                if i > 0 {
                    let up = f.get(i - 1, j);
                    assert!(up < s || (up == s && matches!(s, Symbol::U(_))));
                }
            }
        }
    }
}

#[test]
fn weighted_identity_holds_for_larger_alphabets() {
    for (m, n) in [(3, 1), (1, 3), (3, 2)] {
        for r in 1..=4 {
            let total: u64 = partitions(r).iter().map(|p| count_syt(p) * count_ssyt(p, m, n)).sum();
            assert_eq!(total, ((m + n) as u64).pow(r as u32));
        }
    }
}
