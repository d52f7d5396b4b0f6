use ratsq_core::analysis::*;
use ratsq_core::sigmacore::tau;
use ratsq_core::Natural;

fn n(v: u64) -> Natural {
    Natural::from(v)
}

#[test]
fn sweep_records_validate() {
    let recs = sweep(&n(1), &n(2000)).unwrap();
    assert_eq!(recs.len(), 2000);
    for (i, r) in recs.iter().enumerate() {
        assert_eq!(r.a, n(i as u64 + 1));
        r.check().unwrap();
    }
}

#[test]
fn sweep_is_independent_of_thread_count() {
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let four = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let a = one.install(|| sweep(&n(300), &n(700)).unwrap());
    let b = four.install(|| sweep(&n(300), &n(700)).unwrap());
    assert_eq!(a, b);
}

#[test]
fn on_bound_share_first_500() {
    let f = on_bound_fraction(&n(1), &n(500)).unwrap();
    assert_eq!((f.on_bound, f.total), (314, 500));
    assert_eq!(f.fraction.to_string(), "157/250");
}

#[test]
fn tau_profiles_are_well_formed() {
    for a in 1u64..=300 {
        assert!(TauProfile::compute(&n(a), 400).check(), "a={a}");
    }
}

#[test]
fn pronic_contains_every_even_denominator() {
    for k in 1u64..=50 {
        let a = n(k * k + k);
        for s in (2u64..=200).step_by(2) {
            assert!(!tau(&a, &n(s)).is_zero(), "n={k} s={s}");
        }
        if k > 1 {
            assert!(tau(&a, &n(3)).is_zero(), "n={k}");
        }
    }
}

#[test]
fn off_bound_peak_values() {
    let peaks = offbound_peaks(&n(11), &n(20)).unwrap();
    let sig: Vec<u64> = peaks
        .iter()
        .map(|p| p.sigma_peak.to_u64().unwrap())
        .collect();
    assert_eq!(sig, vec![11, 11, 11, 13, 13, 15, 15, 15, 17, 17]);
    assert!(peaks.iter().all(|p| p.at_expected));
}

#[test]
fn off_bound_minima_come_in_pairs() {
    for k in 7u64..=30 {
        let m = offbound_minima(&n(k)).unwrap();
        assert!(minima_straddle(&n(k), &m), "n={k}: {m:?}");
    }
    assert!(offbound_minima(&n(6)).is_err());
    // n = 7 concretely
    assert_eq!(offbound_minima(&n(7)).unwrap(), vec![n(54), n(57)]);
}

#[test]
fn k_set_conventions() {
    let min = k_set(&n(100), KConvention::Minimal).unwrap();
    let ex = k_set(&n(100), KConvention::Existential).unwrap();
    assert!(min.is_subset(&ex));
    for tail in [15u64, 18, 19, 22, 29, 40] {
        assert!(min.contains(&n(tail)));
    }
    for k in 2u64..=30 {
        assert!(k_set(&n(k), KConvention::Minimal)
            .unwrap()
            .contains(&Natural::ONE));
    }
}

#[test]
fn symmetry_within_troughs() {
    let rep = symmetry_report(&n(2000), SymmetryRange::Trough).unwrap();
    assert_eq!(rep.per_n.len(), 43); // n = 2..=44
    assert_eq!(rep.verdict, Verdict::Pass);
}

#[test]
fn odd_thresholds_exist() {
    for k in [3u64, 5, 7, 9] {
        let t = odd_threshold(&n(k), &n(200)).unwrap();
        assert_eq!(t.verdict, Verdict::Pass, "k={k}: {t:?}");
    }
    assert!(odd_threshold(&n(4), &n(10)).is_err());
}

#[test]
fn conjecture_report_is_decisive_with_room() {
    let rep = conjecture1_report(300, 4, 20_000).unwrap();
    assert_eq!(rep.indeterminate, 0);
    assert_eq!(rep.witnessed + rep.refuted, rep.entries.len() as u64);
    assert!(rep.entries.iter().all(|e| e.witness.is_some() || e.flagged));
}
