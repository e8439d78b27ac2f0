//! Subalgebras and centralizers inside `End(T^r(V))`, all exact over `ℚ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::linalg::{dense, sparse, Echelon, SparseVec};
use crate::matrix::Matrix;
use crate::scalar::{q, Parity, Rational};
use crate::supermatrix::{one_param_e, one_param_h, GlElement, SuperDim, SuperMatrix};
use crate::tableaux::{dimension_table, Partition};
use crate::tensor::{
    diagonal_action, rho_group, tau_permutation, tensor_dim, theta_at_point, theta_derivation, Permutation,
    TensorOperator,
};

/// Default bound on `(m+n)^r` for the linear-algebra reports.
pub const DEFAULT_CAP: usize = 64;

/// A linear subspace of `End(T^r(V))`, operators flattened row-major.
#[derive(Debug, Clone)]
pub struct OperatorSpace {
    dim: SuperDim,
    degree: usize,
    basis: Vec<TensorOperator<Rational>>,
    echelon: Echelon,
}

fn flatten(op: &TensorOperator<Rational>) -> SparseVec {
    sparse(op.matrix().entries())
}

impl OperatorSpace {
    pub fn empty(dim: SuperDim, degree: usize) -> Result<Self> {
        let size = tensor_dim(dim, degree)?;
        Ok(OperatorSpace { dim, degree, basis: Vec::new(), echelon: Echelon::new(size * size) })
    }

    /// Ambient size `D = (m+n)^r`.
    pub fn ambient(&self) -> usize {
        tensor_dim(self.dim, self.degree).expect("checked at construction")
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TensorOperator<Rational>] {
        &self.basis
    }

    fn check(&self, op: &TensorOperator<Rational>) -> Result<()> {
        if op.dim() != self.dim || op.degree() != self.degree {
            return Err(Error::Dimension(format!(
                "operator on T^{}({}) in a space over T^{}({})",
                op.degree(),
                op.dim(),
                self.degree,
                self.dim
            )));
        }
        Ok(())
    }

    /// Adds `op` if independent of the current basis.
    pub fn insert(&mut self, op: TensorOperator<Rational>) -> Result<bool> {
        self.check(&op)?;
        let added = self.echelon.insert(&flatten(&op));
        if added {
            self.basis.push(op);
        }
        Ok(added)
    }

    pub fn contains(&self, op: &TensorOperator<Rational>) -> bool {
        self.check(op).is_ok() && self.echelon.contains(&flatten(op))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Equality by double inclusion.
    pub fn same_as(&self, other: &Self) -> bool {
        self.dimension() == other.dimension() && self.is_subspace_of(other) && other.is_subspace_of(self)
    }
}

fn check_common(ops: &[TensorOperator<Rational>]) -> Result<(SuperDim, usize)> {
    let first = ops.first().ok_or_else(|| Error::Dimension("empty operator list".into()))?;
    Ok((first.dim(), first.degree()))
}

/// Linear span.
pub fn span(ops: &[TensorOperator<Rational>]) -> Result<OperatorSpace> {
    let (dim, degree) = check_common(ops)?;
    let mut space = OperatorSpace::empty(dim, degree)?;
    for op in ops {
        space.insert(op.clone())?;
    }
    Ok(space)
}

/// The unital subalgebra generated by `gens`.
///
/// Each new basis element is multiplied on the right by every generator until
/// nothing new appears.
pub fn algebra_generated(dim: SuperDim, degree: usize, gens: &[TensorOperator<Rational>]) -> Result<OperatorSpace> {
    let mut space = OperatorSpace::empty(dim, degree)?;
    let mut frontier = Vec::new();
    let id = TensorOperator::identity(dim, degree, ())?;
    for op in std::iter::once(id).chain(gens.iter().cloned()) {
        if space.insert(op.clone())? {
            frontier.push(op);
        }
    }
    while let Some(b) = frontier.pop() {
        for g in gens {
            let prod = b.mul(g)?;
            if space.insert(prod.clone())? {
                frontier.push(prod);
            }
        }
    }
    Ok(space)
}

/// All `x` with `x·s = s·x` for every basis element `s`.
pub fn centralizer(space: &OperatorSpace) -> Result<OperatorSpace> {
    let d = space.ambient();
    let mut equations = Echelon::new(d * d);
    for s in space.basis() {
        let s = s.matrix();
        // (x s − s x)_{ij} = Σ_k x_ik s_kj − s_ik x_kj
        for i in 0..d {
            for j in 0..d {
                let mut row = SparseVec::new();
                for k in 0..d {
                    let skj = s.get(k, j);
                    if !num_traits::Zero::is_zero(skj) {
                        *row.entry(i * d + k).or_insert_with(|| q(0)) += skj;
                    }
                    let sik = s.get(i, k);
                    if !num_traits::Zero::is_zero(sik) {
                        *row.entry(k * d + j).or_insert_with(|| q(0)) -= sik;
                    }
                }
                row.retain(|_, v| !num_traits::Zero::is_zero(v));
                if !row.is_empty() {
                    equations.insert(&row);
                }
            }
        }
    }
    let mut out = OperatorSpace::empty(space.dim, space.degree)?;
    for x in equations.nullspace() {
        let matrix = Matrix::from_rows((), dense(&x, d * d).chunks(d).map(<[Rational]>::to_vec).collect())?;
        out.insert(TensorOperator::new(space.dim, space.degree, matrix)?)?;
    }
    Ok(out)
}

fn check_cap(dim: SuperDim, r: usize, cap: usize) -> Result<usize> {
    let size = tensor_dim(dim, r)?;
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(size)
}

/// Images `τ_r` of the adjacent transpositions, which generate `τ(S_r)`.
pub fn tau_generators(dim: SuperDim, r: usize) -> Result<Vec<TensorOperator<Rational>>> {
    (0..r.saturating_sub(1))
        .map(|k| tau_permutation(dim, &Permutation::transposition(r, k, k + 1)?))
        .collect()
}

/// `θ_r(e_ij)` for every elementary matrix.
pub fn theta_generators(dim: SuperDim, r: usize) -> Result<Vec<TensorOperator<Rational>>> {
    GlElement::elementary_basis(dim).iter().map(|x| theta_derivation(x, r)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeCount {
    pub shape: Partition,
    pub syt: u64,
    pub ssyt: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurWeylReport {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub dim_tau: usize,
    pub dim_theta: usize,
    pub double_centralizer: bool,
    pub multiplicity_identity: bool,
    pub per_shape: Vec<ShapeCount>,
    pub centralizer_of_tau_is_theta: bool,
    pub centralizer_of_theta_is_tau: bool,
    pub expected_dim_tau: u64,
    pub expected_dim_theta: u64,
}

impl SchurWeylReport {
    /// Every check in the report holds.
    pub fn passed(&self) -> bool {
        self.double_centralizer
            && self.multiplicity_identity
            && self.dim_tau as u64 == self.expected_dim_tau
            && self.dim_theta as u64 == self.expected_dim_theta
    }
}

/// Builds `⟨τ(S_r)⟩` and `⟨θ(gl(m|n))⟩` and checks that each is the other's centralizer.
pub fn double_centralizer_report(m: usize, n: usize, r: usize, cap: usize) -> Result<SchurWeylReport> {
    let dim = SuperDim::new(m, n)?;
    let size = check_cap(dim, r, cap)?;
    let tau = algebra_generated(dim, r, &tau_generators(dim, r)?)?;
    let theta = algebra_generated(dim, r, &theta_generators(dim, r)?)?;
    let c_tau = centralizer(&tau)?;
    let c_theta = centralizer(&theta)?;
    let centralizer_of_tau_is_theta = c_tau.same_as(&theta);
    let centralizer_of_theta_is_tau = c_theta.same_as(&tau);

    let table = dimension_table(m, n, r)?;
    let admissible = table.iter().filter(|row| row.admissible);
    let expected_dim_tau = admissible.clone().map(|row| row.syt * row.syt).sum();
    let expected_dim_theta = admissible.map(|row| row.ssyt * row.ssyt).sum();
    let identity_trace = TensorOperator::<Rational>::identity(dim, r, ())?.matrix().trace();
    let weighted: u64 = table.iter().map(|row| row.syt * row.ssyt).sum();
    Ok(SchurWeylReport {
        m,
        n,
        r,
        dim_tau: tau.dimension(),
        dim_theta: theta.dimension(),
        double_centralizer: centralizer_of_tau_is_theta && centralizer_of_theta_is_tau,
        multiplicity_identity: identity_trace == q(weighted as i64) && weighted as usize == size,
        per_shape: table.into_iter().map(|row| ShapeCount { shape: row.shape, syt: row.syt, ssyt: row.ssyt }).collect(),
        centralizer_of_tau_is_theta,
        centralizer_of_theta_is_tau,
        expected_dim_tau,
        expected_dim_theta,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoThetaReport {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub grassmann_n: usize,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

/// Nilpotent and odd parameters in `Λ_N` used for the generator identities.
fn odd_parameters(big_n: usize) -> Result<Vec<GrassmannElement>> {
    let mut out: Vec<GrassmannElement> =
        (1..=big_n).map(|k| GrassmannElement::generator(big_n, k)).collect::<Result<_>>()?;
    let sum = out[0].try_add(&out[1])?;
    out.push(sum);
    if big_n >= 3 {
        out.push(GrassmannElement::monomial(big_n, &[1, 2, 3], q(2))?);
    }
    Ok(out)
}

/// Generator-level check of `⟨ρ_{r,A}(GL(m|n)(A))⟩ = ⟨θ_{r,A}(gl(m|n)(A))⟩` at `A = Λ_N`.
///
/// - every odd `E_ij(α)` satisfies `ρ(E_ij(α)) = id + θ_A(α e_ij)`, so each side's
///   odd generators lie in the other side's algebra;
/// - the same identity for even `E_ij(α)` and `H_i(1+α)` with `α = ξ_1ξ_2`, `α² = 0`;
/// - for the even part, the `ℚ`-algebra generated by `ρ⁰` of `E_ij(1)`, `H_i(2)`
///   equals the one generated by `θ⁰` of the even `e_ij`.
pub fn rho_theta_equality_report(m: usize, n: usize, r: usize, big_n: usize, cap: usize) -> Result<RhoThetaReport> {
    let dim = SuperDim::new(m, n)?;
    check_cap(dim, r, cap)?;
    if big_n < 2 {
        return Err(Error::Dimension("the ρ/θ report needs N ≥ 2".into()));
    }
    let size = dim.size();
    let id = TensorOperator::<GrassmannElement>::identity(dim, r, big_n)?;
    let mut checks = Vec::new();

    let odd_pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|i| (0..size).map(move |j| (i, j)))
        .filter(|&(i, j)| dim.entry_parity(i, j) == Parity::Odd)
        .collect();
    let mut odd_ok = 0;
    let mut odd_total = 0;
    let mut witness = String::new();
    for &(i, j) in &odd_pairs {
        let e = GlElement::elementary(dim, i, j)?;
        for alpha in odd_parameters(big_n)? {
            odd_total += 1;
            let lhs = rho_group(&one_param_e(dim, i, j, alpha.clone())?, r)?;
            let rhs = id.add(&theta_at_point(&e, &alpha, r)?)?;
            if lhs == rhs {
                odd_ok += 1;
            } else if witness.is_empty() {
                witness = format!("fails for E_{i}{j}({alpha})");
            }
        }
    }
    checks.push(Check::new(
        "odd_generator_linkage",
        odd_ok == odd_total,
        if witness.is_empty() { format!("{odd_ok}/{odd_total} identities ρ(E_ij(α)) = id + θ_A(α e_ij)") } else { witness },
    ));

    let nil = GrassmannElement::monomial(big_n, &[1, 2], q(1))?;
    let mut even_ok = 0;
    let mut even_total = 0;
    for i in 0..size {
        for j in 0..size {
            if dim.entry_parity(i, j) != Parity::Even {
                continue;
            }
            even_total += 1;
            let e = GlElement::elementary(dim, i, j)?;
            let g = if i == j {
                one_param_h(dim, i, GrassmannElement::one(big_n).try_add(&nil)?)?
            } else {
                one_param_e(dim, i, j, nil.clone())?
            };
            if rho_group(&g, r)? == id.add(&theta_at_point(&e, &nil, r)?)? {
                even_ok += 1;
            }
        }
    }
    checks.push(Check::new(
        "even_nilpotent_linkage",
        even_ok == even_total,
        format!("{even_ok}/{even_total} identities with α = ξ1ξ2"),
    ));

    // classical part over ℚ
    let mut rho0 = Vec::new();
    let mut theta0 = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if dim.entry_parity(i, j) != Parity::Even {
                continue;
            }
            theta0.push(theta_derivation(&GlElement::elementary(dim, i, j)?, r)?);
            let g: SuperMatrix<Rational> = if i == j { one_param_h(dim, i, q(2))? } else { one_param_e(dim, i, j, q(1))? };
            rho0.push(diagonal_action(&g, r));
        }
    }
    let rho_alg = algebra_generated(dim, r, &rho0)?;
    let theta_alg = algebra_generated(dim, r, &theta0)?;
    checks.push(Check::new(
        "even_part_classical",
        rho_alg.same_as(&theta_alg),
        format!("dim ⟨ρ⁰⟩ = {}, dim ⟨θ⁰⟩ = {}", rho_alg.dimension(), theta_alg.dimension()),
    ));

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(RhoThetaReport { m, n, r, grassmann_n: big_n, checks, all_pass })
}
