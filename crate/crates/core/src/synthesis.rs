//! Orders admitting regular nut graphs, and certified constructions for
//! degrees 3 and 4 by repeated Fowler expansion.

use num_bigint::BigInt;
use thiserror::Error;

use crate::catalog::{self, antiprism_seed};
use crate::constructions::{fowler_lift, FowlerSite};
use crate::graph::Graph;
use crate::kernel::{classify, ClassTag, NutCertificate};
use crate::linalg;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    NonMember(&'static str),
    Unknown(&'static str),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        *self == Membership::Member
    }
}

/// Whether a `rho`-regular nut graph on `n` vertices exists.
///
/// Degrees 2, 3 and 4 are settled completely. Degrees 0 and 1 only give
/// edgeless graphs and perfect matchings. Higher degrees are open.
pub fn membership(rho: usize, n: usize) -> Membership {
    use Membership::*;
    match rho {
        0 if n == 1 => NonMember("K1 is excluded: nut graphs have at least two vertices"),
        0 => NonMember("an edgeless graph on n >= 2 vertices has nullity n"),
        1 => NonMember("a 1-regular graph is a perfect matching, which is nonsingular"),
        2 => NonMember("no regular nut graphs of degree two: cycles are nonsingular or have nullity 2"),
        3 if n % 2 == 1 => NonMember("a cubic graph has even order"),
        3 if n < 12 => NonMember("no cubic nut graph has fewer than 12 vertices"),
        3 if n == 14 || n == 16 => NonMember("no cubic nut graphs on 14 and 16 vertices"),
        3 => Member,
        4 if n < 8 => NonMember("no quartic nut graph has fewer than 8 vertices"),
        4 if n % 2 == 1 && n <= 13 => NonMember("no quartic nut graphs of odd order at most 13"),
        4 => Member,
        _ => Unknown("open problem: the orders of regular nut graphs of degree 5 or more are not determined"),
    }
}

/// How a target graph is reached: a seed plus `steps` Fowler expansions,
/// each at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisPlan {
    pub rho: usize,
    pub target_order: usize,
    pub seed_name: &'static str,
    pub seed_order: usize,
    pub steps: usize,
    pub vertex_rule: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("no {rho}-regular nut graph on {n} vertices: {reason}")]
    NonMember {
        rho: usize,
        n: usize,
        reason: &'static str,
    },
    #[error("{rho}-regular nut graphs on {n} vertices: {reason}")]
    Unknown {
        rho: usize,
        n: usize,
        reason: &'static str,
    },
    #[error("internal check failed at step {0}: lifted vector is not a nut certificate")]
    LiftFailed(usize),
}

fn seed_for(rho: usize, n: usize) -> (&'static str, usize) {
    match (rho, n % 2, if rho == 3 { n % 6 } else { n % 8 }) {
        (3, _, 0) => ("frucht", 12),
        (3, _, 2) => ("cubic20", 20),
        (3, _, 4) => ("cubic22", 22),
        (4, 0, 0) => ("antiprism4", 8),
        (4, 0, 2) => ("antiprism5", 10),
        (4, 0, 4) => ("quartic12", 12),
        (4, 0, 6) => ("antiprism7", 14),
        (4, 1, 7) => ("quartic15", 15),
        (4, 1, 1) => ("quartic17", 17),
        (4, 1, 3) => ("quartic19", 19),
        (4, 1, 5) => ("quartic21", 21),
        _ => unreachable!("seed_for called on a member pair"),
    }
}

pub fn plan(rho: usize, n: usize) -> Result<SynthesisPlan, SynthesisError> {
    match membership(rho, n) {
        Membership::NonMember(reason) => Err(SynthesisError::NonMember { rho, n, reason }),
        Membership::Unknown(reason) => Err(SynthesisError::Unknown { rho, n, reason }),
        Membership::Member => {
            let (seed_name, seed_order) = seed_for(rho, n);
            Ok(SynthesisPlan {
                rho,
                target_order: n,
                seed_name,
                seed_order,
                steps: (n - seed_order) / (2 * rho),
                vertex_rule: "vertex 0",
            })
        }
    }
}

fn seed_graph(name: &str) -> Graph {
    match name {
        "antiprism5" => antiprism_seed(5),
        "antiprism7" => antiprism_seed(7),
        other => catalog::seed(other).expect("plan names a catalog seed").graph,
    }
}

/// A `rho`-regular nut graph on `n` vertices with its certificate.
///
/// The seed's kernel vector is computed once and then carried through each
/// Fowler step by the explicit lift; each lifted vector is rechecked.
pub fn construct_regular_nut(
    rho: usize,
    n: usize,
) -> Result<(Graph, NutCertificate, SynthesisPlan), SynthesisError> {
    let plan = plan(rho, n)?;
    let mut g = seed_graph(plan.seed_name);
    let mut x: Vec<BigInt> = classify(&g)
        .witness
        .expect("seeds are nut graphs");
    for step in 1..=plan.steps {
        let site = FowlerSite::new(&g, 0).expect("regular graphs have no isolated vertex");
        g = site.build();
        x = fowler_lift(&x, &site).expect("vector matches base order");
        linalg::normalize(&mut x);
        let cert = NutCertificate { vector: x.clone() };
        if !cert.verify(&g) || !g.is_regular(rho) {
            return Err(SynthesisError::LiftFailed(step));
        }
    }
    debug_assert_eq!(g.order(), n);
    Ok((g, NutCertificate { vector: x }, plan))
}

/// Independent recomputation of regularity and class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyReport {
    pub order: usize,
    pub rho: usize,
    pub regular: bool,
    pub class: ClassTag,
    pub nullity: usize,
    pub certificate: Option<NutCertificate>,
}

impl CertifyReport {
    pub fn is_regular_nut(&self) -> bool {
        self.regular && self.class == ClassTag::Nut
    }
}

pub fn certify(g: &Graph, rho: usize) -> CertifyReport {
    let class = classify(g);
    CertifyReport {
        order: g.order(),
        rho,
        regular: g.is_regular(rho),
        class: class.tag,
        nullity: class.nullity(),
        certificate: class.nut_certificate(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        assert!(matches!(membership(3, 16), Membership::NonMember(_)));
        assert!(matches!(membership(4, 13), Membership::NonMember(_)));
        assert!(matches!(membership(5, 30), Membership::Unknown(_)));
        assert!(membership(3, 12).is_member());
        assert!(membership(4, 15).is_member());
        assert!(!membership(4, 14 - 1).is_member());
    }

    #[test]
    fn plans() {
        let p = plan(3, 18).unwrap();
        assert_eq!((p.seed_name, p.steps), ("frucht", 1));
        let p = plan(4, 8).unwrap();
        assert_eq!((p.seed_name, p.steps), ("antiprism4", 0));
        let p = plan(4, 23).unwrap();
        assert_eq!((p.seed_name, p.steps), ("quartic15", 1));
        assert!(matches!(plan(2, 8), Err(SynthesisError::NonMember { .. })));
    }

    #[test]
    fn construct_and_certify() {
        let (g, cert, p) = construct_regular_nut(4, 23).unwrap();
        assert_eq!(g.order(), 23);
        assert_eq!(p.seed_order + p.steps * 8, 23);
        let report = certify(&g, 4);
        assert!(report.is_regular_nut());
        assert_eq!(report.certificate, Some(cert));
    }
}
