//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measurements (visible with `--nocapture`). Every check is exact; the
//! only oracles are independent recomputations (high-precision decimal sign,
//! brute-force lattice minima, the evaluation map itself).

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use ftau::characters::{in_sqrt_commutator, lift_from_k, restrict_to_k, Character, CharacterOnK};
use ftau::golden::GoldenInt;
use ftau::normal::{is_normal_form, normalize, to_normal_form_data, DEFAULT_STEP_LIMIT};
use ftau::pl::PlHomeo;
use ftau::sigma::{kernel_coabelian_type, kernel_witness, sigma_membership, KernelType};
use ftau::subgroups::{hnn_reduce, hnn_rewrite};
use ftau::words::{
    coset_parity, lambda_of, relations_up_to, rho_of, Family, Letter, Word,
};
use ftau::CharacterClass;

fn rng_for(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x00F7A0 + criterion)
}

fn random_letter(rng: &mut ChaCha8Rng, max_index: u32) -> Letter {
    Letter {
        family: if rng.gen_bool(0.5) { Family::X } else { Family::Y },
        index: rng.gen_range(0..=max_index),
        inverse: rng.gen_bool(0.5),
    }
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, max_index: u32) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| random_letter(rng, max_index)).collect())
}

/// Inserts a relation instance (as an identity word `l r^-1` or `r l^-1`) or
/// a free inverse pair at a random position.
fn insert_identity(rng: &mut ChaCha8Rng, word: &Word, relations: &[(Word, Word)]) -> Word {
    let mut letters = word.letters().to_vec();
    let position = rng.gen_range(0..=letters.len());
    let filler: Vec<Letter> = if rng.gen_bool(0.75) {
        let (lhs, rhs) = &relations[rng.gen_range(0..relations.len())];
        let identity = if rng.gen_bool(0.5) {
            lhs.concat(&rhs.inverse())
        } else {
            rhs.concat(&lhs.inverse())
        };
        identity.letters().to_vec()
    } else {
        let l = random_letter(rng, 6);
        vec![l, l.inverted()]
    };
    letters.splice(position..position, filler);
    Word::from_letters(letters)
}

#[test]
fn criterion_01_defining_relations_as_homeomorphisms() {
    let start = Instant::now();
    let relations = relations_up_to(8);
    for (lhs, rhs) in &relations {
        assert_eq!(lhs.eval(), rhs.eval(), "relation {lhs} = {rhs} failed");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget is 5 s");
    println!(
        "criterion 1: PASS - {} relation pairs evaluate to equal maps ({:.2?})",
        relations.len(),
        elapsed
    );
}

#[test]
fn criterion_02_generator_boundary_slopes() {
    assert_eq!(PlHomeo::generator_x(0).slope_exp_at_zero(), -2);
    for i in 0..=8u32 {
        assert_eq!(PlHomeo::generator_x(i).slope_exp_at_one(), 1, "x_{i} at 1");
        assert_eq!(PlHomeo::generator_y(i).slope_exp_at_one(), 1, "y_{i} at 1");
    }
    println!("criterion 2: PASS - slope of x0 at 0 is tau^-2; every generator has slope tau at 1");
}

#[test]
fn criterion_03_characters_match_boundary_slopes() {
    let mut rng = rng_for(3);
    for _ in 0..1000 {
        let word = random_word(&mut rng, 30, 6);
        let map = word.eval();
        assert_eq!(lambda_of(&word), map.slope_exp_at_zero(), "lambda on {word}");
        assert_eq!(rho_of(&word), map.slope_exp_at_one(), "rho on {word}");
    }
    println!("criterion 3: PASS - lambda/rho equal boundary slope exponents on 1000 random words");
}

#[test]
fn criterion_04_normal_form_soundness_and_uniqueness() {
    let start = Instant::now();
    let mut rng = rng_for(4);
    let mut max_len = 0usize;
    for _ in 0..500 {
        let word = random_word(&mut rng, 30, 6);
        let nf = normalize(&word, DEFAULT_STEP_LIMIT).expect("within default step limit");
        assert!(is_normal_form(&nf), "output of normalize({word}) not normal");
        assert_eq!(nf.eval(), word.eval(), "normalize changed the element of {word}");
        max_len = max_len.max(nf.len());
    }
    let relations = relations_up_to(6);
    for _ in 0..500 {
        let word = random_word(&mut rng, 18, 6);
        let mut other = word.clone();
        for _ in 0..rng.gen_range(1..=4) {
            other = insert_identity(&mut rng, &other, &relations);
        }
        if rng.gen_bool(0.5) {
            other = other.free_reduce();
        }
        let nf_word = normalize(&word, DEFAULT_STEP_LIMIT).expect("within limit");
        let nf_other = normalize(&other, DEFAULT_STEP_LIMIT).expect("within limit");
        assert_eq!(nf_word, nf_other, "normal forms differ for {word} vs {other}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, budget is 60 s");
    println!(
        "criterion 4: PASS - 500 normalizations sound, 500 related pairs letter-identical ({:.2?})",
        elapsed
    );
}

#[test]
fn criterion_05_reflection_automorphism() {
    // The fixed pair of maps with supports away from 1 and 0 respectively.
    let tp = GoldenInt::tau_pow;
    let f_li = PlHomeo::from_pieces(vec![
        (GoldenInt::zero(), GoldenInt::zero(), 1),
        (tp(2), tp(3), -1),
        (tp(1), tp(1), 0),
    ])
    .unwrap();
    let g_li = PlHomeo::from_pieces(vec![
        (GoldenInt::zero(), GoldenInt::zero(), 0),
        (tp(2), tp(2), -1),
        (tp(1), &GoldenInt::one() - &tp(3), 1),
    ])
    .unwrap();
    assert_eq!(f_li.flip(), g_li);

    let mut rng = rng_for(5);
    for _ in 0..200 {
        let word = random_word(&mut rng, 16, 6);
        let map = word.eval();
        let flipped = map.flip();
        assert_eq!(flipped.flip(), map, "flip not involutive on {word}");
        assert_eq!(flipped.slope_exp_at_zero(), map.slope_exp_at_one(), "lambda after flip");
        assert_eq!(flipped.slope_exp_at_one(), map.slope_exp_at_zero(), "rho after flip");
    }
    println!("criterion 5: PASS - flip maps the example pair correctly; involution and slope swap on 200 elements");
}

#[test]
fn criterion_06_coset_structure() {
    let mut rng = rng_for(6);
    let relations = relations_up_to(6);
    for _ in 0..500 {
        let word = random_word(&mut rng, 20, 6);
        let fattened = insert_identity(&mut rng, &word, &relations);
        assert_eq!(coset_parity(&word), coset_parity(&fattened));
    }
    let y0 = Word::from_letters(vec![Letter::y(0)]);
    for _ in 0..200 {
        let word = random_word(&mut rng, 20, 6);
        let shifted = y0.concat(&word);
        assert_eq!(
            (coset_parity(&word) == 0) as u8 + (coset_parity(&shifted) == 0) as u8,
            1,
            "exactly one of w, y0 w lies in K"
        );
        let nf = normalize(&word, DEFAULT_STEP_LIMIT).expect("within limit");
        let data = to_normal_form_data(&nf).expect("normalized");
        assert_eq!(data.y_flag(0) as u8, coset_parity(&word), "parity vs y0 flag of {word}");
    }
    println!("criterion 6: PASS - parity relation-invariant (500), index-two sandwich and normal-form flag (200)");
}

#[test]
fn criterion_07_hnn_rewriting() {
    let mut rng = rng_for(7);
    for _ in 0..500 {
        // Words over the HNN alphabet: x0 letters and anything of index >= 1.
        let len = rng.gen_range(0..=40);
        let letters: Vec<Letter> = (0..len)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    Letter { family: Family::X, index: 0, inverse: rng.gen_bool(0.5) }
                } else {
                    Letter {
                        family: if rng.gen_bool(0.5) { Family::X } else { Family::Y },
                        index: rng.gen_range(1..=6),
                        inverse: rng.gen_bool(0.5),
                    }
                }
            })
            .collect();
        let word = Word::from_letters(letters);
        let h = hnn_rewrite(&word).expect("alphabet respected");
        assert!(h.core().min_index().map_or(true, |i| i >= 1), "core of {word} touches index 0");
        assert_eq!(h.to_word().eval(), word.eval(), "rewrite changed {word}");
        let reduced = hnn_reduce(&h, DEFAULT_STEP_LIMIT).expect("within limit");
        assert!(reduced.core().min_index().map_or(true, |i| i >= 1));
        assert_eq!(reduced.to_word().eval(), word.eval(), "reduce changed {word}");
    }
    println!("criterion 7: PASS - rewrite and Britton reduction preserve 500 random K-alphabet words");
}

#[test]
fn criterion_08_character_lift() {
    let rational = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    for i in -10..=10i64 {
        for j in -10..=10i64 {
            let psi = CharacterOnK::new(rational(i, 2), rational(j, 2));
            let lifted = lift_from_k(&psi);
            assert_eq!(restrict_to_k(&lifted), psi, "restriction of lift at ({i}/2, {j}/2)");
            // The one nontrivial lift value: chi(y0) = psi(x0 x1) / 2.
            let y0 = Word::parse("y0").unwrap();
            let x0x1 = Word::parse("x0 x1").unwrap();
            assert_eq!(
                lifted.eval(&y0),
                psi.eval(&x0x1) / rational(2, 1),
                "lift value on y0 at ({i}/2, {j}/2)"
            );
        }
    }
    assert_eq!(lift_from_k(&CharacterOnK::from_ints(1, 0)), Character::lambda());
    assert_eq!(lift_from_k(&CharacterOnK::from_ints(0, 1)), Character::rho());
    println!("criterion 8: PASS - lift inverts restriction on the 21x21 grid; lambda and rho lift to themselves");
}

#[test]
fn criterion_09_sigma_oracle() {
    let class = |a: i64, b: i64| CharacterClass::new(a, b).unwrap();
    assert!(sigma_membership(&class(1, 0), 1) && sigma_membership(&class(1, 0), 2));
    assert!(sigma_membership(&class(0, 1), 1) && sigma_membership(&class(0, 1), 2));
    assert!(!sigma_membership(&class(-1, 0), 1));
    assert!(!sigma_membership(&class(0, -1), 1));
    assert!(sigma_membership(&class(-1, -1), 1) && !sigma_membership(&class(-1, -1), 2));

    let mut rng = rng_for(9);
    let mut checked = 0;
    while checked < 200 {
        let a = rng.gen_range(-20i64..=20);
        let b = rng.gen_range(-20i64..=20);
        if a == 0 && b == 0 {
            continue;
        }
        checked += 1;
        let c = class(a, b);
        let mut previous = true;
        for n in 1..=6u32 {
            let now = sigma_membership(&c, n);
            assert!(previous || !now, "chain not monotone at {c} / n = {n}");
            assert_eq!(now, sigma_membership(&class(b, a), n), "flip symmetry at {c}");
            if n >= 2 {
                assert_eq!(now, sigma_membership(&c, 2), "stable range at {c}");
            }
            previous = now;
        }
    }

    for a in -6..=6i64 {
        for b in -6..=6i64 {
            if a == 0 && b == 0 {
                continue;
            }
            let chi = Character::from_ints(a, b);
            let expected = if a * b < 0 {
                KernelType::FInfty
            } else if a * b > 0 {
                KernelType::FgNotFp2
            } else {
                KernelType::NotFg
            };
            assert_eq!(kernel_coabelian_type(&chi).unwrap(), expected, "kernel type at ({a}, {b})");
        }
    }
    println!("criterion 9: PASS - cardinal classes, chain/flip symmetry on 200 classes, kernel types on the grid");
}

#[test]
fn criterion_10_kernel_witnesses() {
    let mut rng = rng_for(10);
    let rational = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    for _ in 0..50 {
        let mut pick = || {
            let numer = *[-7i64, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 7].choose(&mut rng).unwrap();
            let denom = rng.gen_range(1i64..=7);
            rational(numer, denom)
        };
        let chi = Character::new(pick(), pick());
        let t0 = kernel_witness(&chi).expect("both coefficients nonzero");
        assert_eq!(chi.eval(&t0), BigRational::zero(), "witness not in the kernel");
        assert_ne!(lambda_of(&t0), 0);
        assert!(!in_sqrt_commutator(&t0));

        // Brute-force lattice oracle: minimal |lambda| over the kernel within
        // the box, using the primitive integer pair (A, B) of the class.
        let class = chi.class().unwrap();
        let a: i64 = class.lambda_coeff().try_into().unwrap();
        let b: i64 = class.rho_coeff().try_into().unwrap();
        let mut best: Option<i64> = None;
        for p in -50i64..=50 {
            for q in -50i64..=50 {
                if p != 0 && a * p + b * q == 0 {
                    best = Some(best.map_or(p.abs(), |m: i64| m.min(p.abs())));
                }
            }
        }
        assert_eq!(
            Some(lambda_of(&t0).abs()),
            best,
            "witness lambda not minimal for ({}, {})",
            chi.lambda_coeff(),
            chi.rho_coeff()
        );
    }
    println!("criterion 10: PASS - 50 witnesses vanish under chi, avoid the torsion locus, and attain the lattice minimum");
}

#[test]
fn criterion_11_golden_ring_and_sign_oracle() {
    let mut rng = rng_for(11);
    let pick = |rng: &mut ChaCha8Rng| {
        GoldenInt::new(rng.gen_range(-1_000_000_000i64..=1_000_000_000), rng.gen_range(-1_000_000_000i64..=1_000_000_000))
    };
    for _ in 0..10_000 {
        let x = pick(&mut rng);
        let y = pick(&mut rng);
        let z = pick(&mut rng);
        assert_eq!(&x + &y, &y + &x);
        assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        assert_eq!(&x * &y, &y * &x);
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        assert_eq!(&x + &GoldenInt::zero(), x);
        assert_eq!(&x * &GoldenInt::one(), x);
        assert_eq!(&x + &(-&x), GoldenInt::zero());
    }

    for m in -30i64..=30 {
        for n in -30i64..=30 {
            assert_eq!(
                GoldenInt::tau_pow(m + n),
                GoldenInt::tau_pow(m) * GoldenInt::tau_pow(n),
                "tau_pow additivity at ({m}, {n})"
            );
        }
    }

    // Independent oracle: sign of a + b(sqrt(5)-1)/2 via 50-digit decimal
    // evaluation, i.e. the integer sign of (2a-b)*10^50 + b*floor(sqrt(5)*10^50)
    // (adjusted to a true floor for negative b). The gap argument: for
    // |a|, |b| <= 10^9 the scaled magnitude is either 0 or at least ~10^40,
    // so the unit floor error never flips the sign.
    let scale = BigInt::from(10).pow(50);
    let sqrt5_scaled = (BigInt::from(5) * &scale * &scale).sqrt();
    for _ in 0..10_000 {
        let x = pick(&mut rng);
        let a = x.coeff_one();
        let b = x.coeff_tau();
        let u = (BigInt::from(2) * a - b) * &scale;
        let v_term = if b >= &BigInt::zero() {
            b * &sqrt5_scaled
        } else {
            b * &sqrt5_scaled - BigInt::from(1)
        };
        let total = u + v_term;
        let oracle_sign = if total.is_zero() {
            0
        } else if total > BigInt::zero() {
            1
        } else {
            -1
        };
        assert_eq!(x.signum(), oracle_sign, "sign oracle disagrees on {x}");
    }
    println!("criterion 11: PASS - ring axioms (10^4 triples), tau_pow additivity on [-30,30]^2, sign vs 50-digit oracle (10^4)");
}
