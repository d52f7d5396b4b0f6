use std::cmp::Ordering;

use num_bigint::BigUint;
use ratsq_core::exactmath::{cmp_int_vs_sum_sqrt, Natural};
use ratsq_core::sigmacore::*;

fn n(v: u64) -> Natural {
    Natural::from(v)
}

fn tau_u(a: u64, s: u64) -> u64 {
    tau(&n(a), &n(s)).to_u64().unwrap()
}

#[test]
fn tau_equals_brute_force() {
    for a in 1u64..=200 {
        for s in 1u64..=300 {
            assert_eq!(tau(&n(a), &n(s)), tau_brute(&n(a), &n(s)), "a={a} s={s}");
        }
    }
}

/// τ_s(a) from the floor formula F(a, s) = ⌊s√(a+1) − ⌊s√a⌋⌋, less one when
/// a + 1 is a square, evaluated with 40 decimal digits.
#[test]
fn tau_matches_floor_formula() {
    let scale = BigUint::from(10u8).pow(40);
    for a in 1u64..=120 {
        let a1_square = n(a + 1).perfect_sqrt().is_some();
        for s in 1u64..=150 {
            let hi = (BigUint::from(s * s * (a + 1)) * &scale * &scale).sqrt();
            let lo_floor = BigUint::from(s * s * a).sqrt();
            let f = (hi - lo_floor * &scale) / &scale;
            let f: u64 = f.try_into().unwrap();
            let expected = if a1_square { f - 1 } else { f };
            assert_eq!(tau_u(a, s), expected, "a={a} s={s}");
        }
    }
}

#[test]
fn tau_steps_by_at_most_one() {
    for a in 1u64..=200 {
        for s in 1u64..300 {
            assert!(tau_u(a, s).abs_diff(tau_u(a, s + 1)) <= 1, "a={a} s={s}");
        }
    }
}

#[test]
fn tau_at_sigma_is_one() {
    for a in 1u64..=2000 {
        let s = sigma(&n(a), Strategy::Scan);
        assert_eq!(tau(&n(a), &s), Natural::ONE, "a={a}");
        assert_eq!(t_set(&n(a), &s).len(), 1);
    }
}

#[test]
fn sum_of_roots_guarantees_k_squares() {
    for a in 1u64..=100 {
        for k in 1u64..=5 {
            for s in 1u64..=200 {
                if cmp_int_vs_sum_sqrt(&n(s), &n(k), &n(a)) == Ordering::Greater {
                    assert!(tau_u(a, s) >= k, "a={a} s={s} k={k}");
                }
            }
        }
    }
}

#[test]
fn sigma_between_bounds() {
    for a in 1u64..=10_000 {
        let s = sigma(&n(a), Strategy::ScanFromTwo);
        assert!(sigma_lower(&n(a)) <= s && s <= sigma_upper(&n(a)), "a={a}");
    }
}

#[test]
fn upper_bound_matches_decimal_ceiling() {
    let scale = BigUint::from(10u8).pow(30);
    for a in 1u64..=3000 {
        let sum = (BigUint::from(a) * &scale * &scale).sqrt()
            + (BigUint::from(a + 1) * &scale * &scale).sqrt();
        let ceil: u64 = (sum / &scale + 1u8).try_into().unwrap();
        assert_eq!(sigma_upper(&n(a)), n(ceil), "a={a}");
    }
}

#[test]
fn strategies_agree() {
    for a in 1u64..=5000 {
        let an = n(a);
        let scan = sigma(&an, Strategy::Scan);
        assert_eq!(scan, sigma(&an, Strategy::Cf), "a={a}");
        assert_eq!(scan, sigma(&an, Strategy::ScanFromTwo), "a={a}");
    }
}

#[test]
fn closed_forms() {
    for k in 1u64..=1000 {
        let pronic = n(k * k + k);
        assert_eq!(sigma(&pronic, Strategy::Scan), n(2));
        assert_eq!(t_set(&pronic, &n(2)), vec![n(2 * k + 1)]);

        let sq = n(k * k);
        assert_eq!(sigma(&sq, Strategy::Scan), n(2 * k + 1));
        assert_eq!(t_set(&sq, &n(2 * k + 1)), vec![n(2 * k * k + k + 1)]);

        let below = n(k * k - 1);
        if k > 1 {
            assert_eq!(sigma(&below, Strategy::Scan), n(2 * k));
            assert_eq!(t_set(&below, &n(2 * k)), vec![n(2 * k * k - 1)]);
        }
    }
}

#[test]
fn criterion_iff_on_bound() {
    for a in 2u64..=5000 {
        let an = n(a);
        assert_eq!(
            on_bound_criterion(&an),
            sigma(&an, Strategy::Scan) == sigma_lower(&an),
            "a={a}"
        );
    }
}

#[test]
fn zero_windows_are_exact() {
    for a in 1u64..=100 {
        let f = decompose(&n(a));
        if f.b.is_zero() || f.c == Natural::ONE {
            continue;
        }
        let windows = zero_windows(&n(a), &n(200));
        for s in 1u64..=200 {
            let sn = n(s);
            let inside = windows.iter().any(|w| w.k <= sn && w.contains(&sn));
            assert_eq!(tau_u(a, s) == 0, inside, "a={a} s={s}");
            // each crowding family alone is already complete
            for side in [Crowding::Left, Crowding::Right] {
                let hit = windows.iter().any(|w| w.side == side && w.contains(&sn));
                assert_eq!(tau_u(a, s) == 0, hit, "a={a} s={s} {side:?}");
            }
        }
    }
}

#[test]
fn monotone_tau_near_squares() {
    for k in 2u64..=50 {
        for a in [k * k, k * k - 1] {
            for s in 1u64..200 {
                assert!(tau_u(a, s + 1) >= tau_u(a, s), "a={a} s={s}");
            }
        }
    }
}

#[test]
fn min_k_exists_and_is_unique() {
    for a in 1u64..=3000 {
        let an = n(a);
        let s = sigma(&an, Strategy::Scan);
        let ks = all_k_given(&an, &s);
        assert_eq!(ks.len(), 1, "a={a}");
        assert_eq!(min_k(&an).unwrap(), ks[0]);
    }
}

#[test]
fn sigma_k_is_a_lower_bound_for_k_squares() {
    // τ_s(a) ≥ k ⟹ s ≥ σ_k(a)
    for a in 1u64..=150 {
        for k in 1u64..=4 {
            let sk = sigma_k(&n(a), &n(k));
            for s in 1u64..=250 {
                if tau_u(a, s) >= k {
                    assert!(n(s) >= sk, "a={a} s={s} k={k}");
                }
            }
        }
    }
}

#[test]
fn big_inputs_take_the_promoted_path() {
    // a well past u64 so that s²(a+1) exceeds 2^127
    let a: Natural = "100000000000000000000000000000000000000".parse().unwrap(); // 10^38 = (10^19)^2
    let root: Natural = "10000000000000000000".parse().unwrap();
    assert_eq!(sigma(&a, Strategy::Scan), &(&root * 2u64) + 1u64);
    assert_eq!(sigma(&a, Strategy::Cf), &(&root * 2u64) + 1u64);
    let below = &a - &Natural::ONE;
    assert_eq!(sigma(&below, Strategy::Cf), &root * 2u64);
    let pronic = &a + &root;
    assert_eq!(sigma(&pronic, Strategy::Scan), n(2));
    assert_eq!(t_set(&pronic, &n(2)), vec![&(&root * 2u64) + 1u64]);
}
