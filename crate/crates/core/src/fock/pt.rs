use alloc::vec;
use alloc::vec::Vec;

use super::eigen::block_eigenvalues;
use super::matrix::OperatorMatrix;
use crate::error::{Error, Result};

/// States whose unperturbed energies chain together within the tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct Cluster {
    /// Basis indices, ascending.
    pub members: Vec<usize>,
    pub energy: f64,
    /// Eigenvalues of the perturbation restricted to the cluster, ascending.
    pub block_eigenvalues: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PTResult {
    /// One entry per basis index. Inside a degenerate cluster the sorted
    /// block eigenvalues are handed out in ascending basis-index order.
    pub corrections: Vec<f64>,
    pub cluster_of: Vec<usize>,
    pub clusters: Vec<Cluster>,
}

impl PTResult {
    pub fn is_degenerate(&self, index: usize) -> bool {
        self.clusters[self.cluster_of[index]].members.len() > 1
    }
}

/// Groups basis indices into clusters of near-equal diagonal energy, in
/// ascending energy order.
pub fn degeneracy_clusters(energies: &[f64], tol: f64) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..energies.len()).collect();
    order.sort_by(|&a, &b| energies[a].total_cmp(&energies[b]).then(a.cmp(&b)));
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for i in order {
        match clusters.last_mut() {
            Some(c) if energies[i] - last < tol => c.push(i),
            _ => clusters.push(vec![i]),
        }
        last = energies[i];
    }
    for c in &mut clusters {
        c.sort_unstable();
    }
    clusters
}

/// Degenerate-aware first-order perturbation theory. `h0` must be diagonal;
/// states are degenerate when their energies differ by less than
/// `deg_tol * energy_scale`.
pub fn first_order_pt(h0: &OperatorMatrix, v: &OperatorMatrix, energy_scale: f64, deg_tol: f64) -> Result<PTResult> {
    if h0.dim() != v.dim() {
        return Err(Error::DimensionMismatch { left: h0.dim(), right: v.dim() });
    }
    let energies: Vec<f64> = h0.diagonal().iter().map(|c| c.re).collect();
    let groups = degeneracy_clusters(&energies, deg_tol * energy_scale);
    let n = h0.dim();
    let mut corrections = vec![0.0; n];
    let mut cluster_of = vec![0; n];
    let mut clusters = Vec::with_capacity(groups.len());
    for (ci, members) in groups.into_iter().enumerate() {
        let block_eigenvalues = if members.len() == 1 {
            vec![v[(members[0], members[0])].re]
        } else {
            block_eigenvalues(v.hermitian_block(&members))
        };
        for (&i, &e) in members.iter().zip(&block_eigenvalues) {
            corrections[i] = e;
            cluster_of[i] = ci;
        }
        let energy = energies[members[0]];
        clusters.push(Cluster { members, energy, block_eigenvalues });
    }
    Ok(PTResult { corrections, cluster_of, clusters })
}
