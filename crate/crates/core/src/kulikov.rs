//! The group-theoretic data of the Kulikov line configuration.
//!
//! Six lines `D1..D6` in the plane, a homomorphism to (Z/3)^6 whose columns
//! are `δ1, δ2, δ3, ω1, ω2, ω3` (the maximal cover), the (Z/3)^2 quotient
//! `Ψ` defining the Kulikov surface itself, and the distinguished elements
//! `ξi = 2δ(i-1) + ωi + ω(i+1)` and `gi`. Indices are cyclic on {1, 2, 3}.

use crate::abelian::{kernel_image_intersect, GroupHom, GroupVector, Subgroup};

pub const MODULUS: u32 = 3;

const PHI_ROWS: [[i64; 6]; 6] = [
    [0, 1, 0, 2, 0, 0],
    [0, 0, 1, 2, 0, 0],
    [0, 0, 1, 0, 2, 0],
    [1, 0, 0, 0, 2, 0],
    [1, 0, 0, 0, 0, 2],
    [0, 1, 0, 0, 0, 2],
];

const PSI_ROWS: [[i64; 6]; 2] = [[1, 1, 1, 0, 1, 2], [0, 0, 0, 1, 1, 1]];

const PSI_TILDE_ROWS: [[i64; 6]; 2] = [[0, 0, 1, 1, 0, 1], [1, 1, 2, 0, 0, 2]];

const G_VECTORS: [[i64; 6]; 3] = [
    [0, 0, 1, 0, 1, 2],
    [1, 2, 0, 0, 1, 0],
    [1, 0, 1, 2, 0, 0],
];

/// Reduces an index into {1, 2, 3}.
pub fn cyc(i: i64) -> usize {
    ((i - 1).rem_euclid(3) + 1) as usize
}

fn hom(rows: &[[i64; 6]]) -> GroupHom {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    GroupHom::new(MODULUS, 6, &rows).expect("static matrix is well formed")
}

/// Homomorphism from the six line classes to (Z/3)^6 (the maximal cover).
pub fn phi() -> GroupHom {
    hom(&PHI_ROWS)
}

/// Homomorphism from the six line classes to (Z/3)^2 (the Kulikov surface).
pub fn psi() -> GroupHom {
    hom(&PSI_ROWS)
}

/// The map (Z/3)^6 -> (Z/3)^2 through which the Kulikov cover factors.
pub fn psi_tilde() -> GroupHom {
    hom(&PSI_TILDE_ROWS)
}

pub fn delta(i: i64) -> GroupVector {
    phi().column(cyc(i) - 1)
}

pub fn omega(i: i64) -> GroupVector {
    phi().column(cyc(i) + 2)
}

/// `ξi = δ(i-1)^2 ωi ω(i+1)` in multiplicative notation.
pub fn xi(i: i64) -> GroupVector {
    delta(i - 1).scale(2).add(&omega(i)).add(&omega(i + 1))
}

/// The tabulated generators of the free subgroup G².
pub fn g(i: i64) -> GroupVector {
    GroupVector::new(MODULUS, &G_VECTORS[cyc(i) - 1])
}

/// 3-torsion point `η = (1, 2)` and rotation `ω = (2, 2)` of the elliptic
/// curve viewed as a (Z/3)^2-cover of the line.
pub fn curve_eta() -> GroupVector {
    GroupVector::new(MODULUS, &[1, 2])
}

pub fn curve_omega() -> GroupVector {
    GroupVector::new(MODULUS, &[2, 2])
}

/// `η` placed in the `i`-th pair of rows of (Z/3)^6.
pub fn eta_on_factor(i: i64) -> GroupVector {
    let k = cyc(i) - 1;
    let mut coords = [0i64; 6];
    for (j, c) in curve_eta().coords().iter().enumerate() {
        coords[2 * k + j] = *c as i64;
    }
    GroupVector::new(MODULUS, &coords)
}

/// G¹: the image of `phi`, order 3^5.
pub fn g1_group() -> Subgroup {
    phi().image()
}

/// G⁰ = ⟨ξ1, ξ2, ξ3⟩.
pub fn g0_group() -> Subgroup {
    Subgroup::span(MODULUS, 6, &[xi(1), xi(2), xi(3)]).expect("same ambient")
}

/// G² = ⟨g1, g2, g3⟩.
pub fn g2_group() -> Subgroup {
    Subgroup::span(MODULUS, 6, &[g(1), g(2), g(3)]).expect("same ambient")
}

/// G² computed as `Ker(Ψ̃) ∩ G¹`.
pub fn g2_as_kernel() -> Subgroup {
    kernel_image_intersect(&psi_tilde(), &g1_group()).expect("dimensions agree")
}

/// Named identity checks among δ, ω, ξ, g, evaluated exactly.
pub fn identity_checks() -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let zero = GroupVector::zero(MODULUS, 6);
    out.push((
        "xi1 + xi2 + xi3 = 0".to_string(),
        xi(1).add(&xi(2)).add(&xi(3)) == zero,
    ));
    out.push((
        "xi1 = (2,1,1,2,0,0)".to_string(),
        xi(1) == GroupVector::new(MODULUS, &[2, 1, 1, 2, 0, 0]),
    ));
    for i in 1..=3 {
        out.push((
            format!("g{i} = xi{} + omega{}", cyc(i + 1), cyc(i + 1)),
            g(i) == xi(i + 1).add(&omega(i + 1)),
        ));
        out.push((
            format!("g{i} = 2 delta{i} + 2 omega{} + omega{}", cyc(i + 1), cyc(i + 2)),
            g(i) == delta(i).scale(2).add(&omega(i + 1).scale(2)).add(&omega(i + 2)),
        ));
        out.push((
            format!("xi{i} = 2 eta{i} + eta{}", cyc(i + 1)),
            xi(i) == eta_on_factor(i).scale(2).add(&eta_on_factor(i + 1)),
        ));
    }
    out.push((
        "delta1 + delta2 + delta3 = 2 (omega1 + omega2 + omega3)".to_string(),
        delta(1).add(&delta(2)).add(&delta(3))
            == omega(1).add(&omega(2)).add(&omega(3)).scale(2),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::matrix_rank_mod_n;

    #[test]
    fn cyclic_indices() {
        assert_eq!(cyc(0), 3);
        assert_eq!(cyc(4), 1);
        assert_eq!(cyc(-1), 2);
    }

    #[test]
    fn group_orders() {
        assert_eq!(g1_group().order(), 243);
        assert_eq!(g0_group().order(), 9);
        assert_eq!(g2_group().order(), 27);
        assert_eq!(matrix_rank_mod_n(&phi()).unwrap(), 5);
        assert_eq!(matrix_rank_mod_n(&psi()).unwrap(), 2);
    }

    #[test]
    fn psi_factors_through_phi() {
        assert_eq!(psi_tilde().compose(&phi()).unwrap(), psi());
    }

    #[test]
    fn all_identities_hold() {
        for (name, ok) in identity_checks() {
            assert!(ok, "{name}");
        }
    }
}
