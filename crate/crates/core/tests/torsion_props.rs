use liepar_core::rootsys::RootSystem;
use liepar_core::torsion::{self, ORACLE_RANK_LIMIT};
use proptest::prelude::*;

const UP_TO_RANK_4: [&str; 12] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"];

fn irreducible_up_to(rank: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=rank {
        out.push(format!("A{n}"));
        if n >= 2 {
            out.push(format!("B{n}"));
        }
        if n >= 3 {
            out.push(format!("C{n}"));
        }
        if n >= 4 {
            out.push(format!("D{n}"));
        }
    }
    out.extend(["E6", "E7", "E8", "F4", "G2"].iter().filter(|t| t[1..].parse::<usize>().unwrap() <= rank).map(|t| t.to_string()));
    out
}

#[test]
fn subsystem_oracle_agrees_with_coroot_coefficients() {
    for ty in UP_TO_RANK_4 {
        let rs = RootSystem::from_label(ty).unwrap();
        let oracle = torsion::torsion_primes_subsystem_oracle(&rs).unwrap();
        assert_eq!(oracle.primes, torsion::torsion_primes_fast(&rs), "{ty}");
        for cert in &oracle.certificates {
            assert!(torsion::verify_certificate(&rs, cert), "{ty} {cert:?}");
        }
    }
}

#[test]
fn extended_diagram_search_agrees_up_to_rank_8() {
    for ty in irreducible_up_to(8) {
        let rs = RootSystem::from_label(&ty).unwrap();
        let out = torsion::torsion_primes_extended_diagram(&rs);
        assert_eq!(out.primes, torsion::torsion_primes_fast(&rs), "{ty}");
        assert!(out.certificates.iter().all(|c| torsion::verify_certificate(&rs, c)), "{ty}");
        if rs.rank() <= ORACLE_RANK_LIMIT {
            let full = torsion::torsion_primes_subsystem_oracle(&rs).unwrap();
            assert_eq!(out.primes, full.primes, "{ty}");
        }
    }
}

#[test]
fn minimal_orbit_dimension_from_the_theta_grading() {
    // g = g_{-2} + g_{-1} + g_0 + g_1 + g_2 under θ^∨, and dim O_min = dim g_1 + 2
    for ty in irreducible_up_to(8) {
        let rs = RootSystem::from_label(&ty).unwrap();
        let theta = (0..rs.num_positive_roots())
            .max_by_key(|&k| RootSystem::height(&rs.positive_roots()[k]))
            .unwrap();
        let g1 = rs
            .positive_roots()
            .iter()
            .filter(|a| rs.coroot_pairing(&rs.root_to_weight(a), theta) == 1)
            .count() as u64;
        assert_eq!(rs.minimal_orbit_dimension().unwrap(), g1 + 2, "{ty}");
        // and the Casimir of the adjoint representation
        let th = rs.highest_root().unwrap();
        let two_rho = rs.rho().scale(2);
        let h = rs.inner(&th, &th.add(&two_rho)) / rs.inner(&th, &th);
        assert_eq!(rs.dual_coxeter_number().unwrap(), h as u64, "{ty}");
    }
}

#[test]
fn tampered_certificates_fail() {
    for ty in ["B3", "B4", "D4", "F4", "G2"] {
        let rs = RootSystem::from_label(ty).unwrap();
        let oracle = torsion::torsion_primes_subsystem_oracle(&rs).unwrap();
        assert!(!oracle.certificates.is_empty(), "{ty}");
        for cert in &oracle.certificates {
            let mut bumped = cert.clone();
            bumped.divisor_witness += 1;
            let mut reprimed = cert.clone();
            reprimed.prime = [3, 5, 7, 11].into_iter().find(|q| cert.divisor_witness % q != 0).unwrap();
            let mut shrunk = cert.clone();
            shrunk.subsystem.pop();
            let mut padded = cert.clone();
            padded.subsystem.push(rs.num_positive_roots());
            for bad in [bumped, reprimed, shrunk, padded] {
                assert!(!torsion::verify_certificate(&rs, &bad), "{ty} {bad:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn products_take_the_union(a in prop::sample::select(UP_TO_RANK_4.to_vec()), b in prop::sample::select(UP_TO_RANK_4.to_vec())) {
        let rs = RootSystem::from_label(&format!("{a}x{b}")).unwrap();
        let ra = RootSystem::from_label(a).unwrap();
        let rb = RootSystem::from_label(b).unwrap();
        prop_assert_eq!(torsion::torsion_primes_fast(&rs), torsion::torsion_primes_fast(&ra).union(&torsion::torsion_primes_fast(&rb)));
    }
}
