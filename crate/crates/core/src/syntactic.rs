//! Syntactic congruences and syntactic algebras of subsets of a regular
//! algebra.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{GCongruence, RegularAlgebra, TranslationMonoid};
use crate::error::Result;
use crate::partition::Partition;
use crate::trees::Sym;

#[derive(Debug, Clone)]
pub struct SyntacticResult {
    /// `θ_H` on the carrier.
    pub theta: Partition,
    /// `SA(H) = A/θ_H`.
    pub algebra: RegularAlgebra,
    /// `φ_H : A → A/θ_H`.
    pub morphism_map: Vec<usize>,
    /// `σ_H = M(θ_H)`, filled by [`reduced_syntactic`].
    pub sigma: Option<Partition>,
    /// `RA(H) = A/(σ_H, θ_H)`, filled by [`reduced_syntactic`].
    pub reduced: Option<RegularAlgebra>,
}

impl SyntacticResult {
    /// `ι_H : Σ → Σ/σ_H`, each class named after its first operator.
    pub fn iota(&self) -> Option<BTreeMap<Sym, Sym>> {
        let sigma = self.sigma.as_ref()?;
        let ops = self.algebra.operators();
        let firsts: Vec<usize> = sigma.blocks().iter().map(|b| b[0]).collect();
        Some(ops.iter().enumerate().map(|(i, f)| (f.clone(), ops[firsts[sigma.block(i)]].clone())).collect())
    }
}

fn signature_partition(n: usize, tr: &TranslationMonoid, member: &[bool]) -> Partition {
    let signatures: Vec<Vec<bool>> =
        (0..n).map(|a| tr.all.iter().map(|p| member[p.apply(a)]).collect()).collect();
    Partition::from_labels(&signatures)
}

fn membership_vector(n: usize, h: &BTreeSet<usize>) -> Vec<bool> {
    (0..n).map(|a| h.contains(&a)).collect()
}

/// `θ_H`: `a θ_H b` iff `p(a) ∈ H ⟺ p(b) ∈ H` for every translation `p`.
/// Elements of `H` outside the carrier are ignored.
pub fn syntactic_congruence(alg: &RegularAlgebra, h: &BTreeSet<usize>) -> Partition {
    syntactic_congruence_with(alg, &alg.translations(), h)
}

/// [`syntactic_congruence`] with a precomputed `Tr(A)`.
pub fn syntactic_congruence_with(alg: &RegularAlgebra, tr: &TranslationMonoid, h: &BTreeSet<usize>) -> Partition {
    signature_partition(alg.size(), tr, &membership_vector(alg.size(), h))
}

/// `SA(H)` with the natural morphism.
pub fn syntactic_algebra(alg: &RegularAlgebra, h: &BTreeSet<usize>) -> Result<SyntacticResult> {
    let theta = syntactic_congruence(alg, h);
    let algebra = alg.quotient(&theta)?;
    Ok(SyntacticResult {
        morphism_map: theta.block_ids().to_vec(),
        theta,
        algebra,
        sigma: None,
        reduced: None,
    })
}

/// Whether `θ_D` is the identity.
pub fn is_disjunctive(alg: &RegularAlgebra, d: &BTreeSet<usize>) -> bool {
    syntactic_congruence(alg, d).is_identity()
}

/// `SA(H)` together with `σ_H = M(θ_H)` and `RA(H)`.
pub fn reduced_syntactic(alg: &RegularAlgebra, h: &BTreeSet<usize>) -> Result<SyntacticResult> {
    let mut result = syntactic_algebra(alg, h)?;
    let sigma = alg.m_operator(&result.theta)?;
    let reduced = alg.g_quotient(&GCongruence { sigma: sigma.clone(), theta: result.theta.clone() })?;
    result.sigma = Some(sigma);
    result.reduced = Some(reduced);
    Ok(result)
}
