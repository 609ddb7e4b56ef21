use super::*;
use proptest::prelude::*;

fn small_fields() -> Vec<FieldSpec> {
    [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]
        .iter()
        .map(|&(p, e)| FieldSpec::new(p, e).unwrap())
        .collect()
}

#[test]
fn axioms_hold_exhaustively_for_small_fields() {
    for f in small_fields() {
        let q = f.q();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "inverse in {f} for {a}");
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c)),
                        "distributivity in {f}"
                    );
                }
            }
        }
    }
}

#[test]
fn prime_field_has_modulus_x() {
    let f = FieldSpec::new(2, 1).unwrap();
    assert_eq!(f.q(), 2);
    assert_eq!(f.modulus(), &[0, 1]);
}

#[test]
fn gf4_uses_the_unique_irreducible_quadratic() {
    let f = FieldSpec::new(2, 2).unwrap();
    assert_eq!(f.modulus(), &[1, 1, 1]); // x^2 + x + 1
    // exhaustive check that it is the only monic irreducible quadratic over GF(2)
    let gf2 = FieldSpec::prime(2).unwrap();
    let mut irreducible = vec![];
    for c0 in 0..2u64 {
        for c1 in 0..2u64 {
            let m = [c0, c1, 1];
            if is_irreducible(&gf2, &m) {
                irreducible.push(m.to_vec());
            }
        }
    }
    assert_eq!(irreducible, vec![vec![1, 1, 1]]);
}

#[test]
fn reducible_modulus_is_rejected() {
    // x^2 + 1 = (x+1)^2 over GF(2)
    let err = FieldSpec::with_modulus(2, 2, &[1, 0, 1]).unwrap_err();
    assert!(matches!(err, Error::ReducibleModulus));
}

#[test]
fn non_prime_characteristic_is_rejected() {
    assert!(matches!(FieldSpec::new(4, 1), Err(Error::NonPrime(4))));
    assert!(matches!(FieldSpec::new(1, 1), Err(Error::NonPrime(1))));
}

#[test]
fn gf4_multiplication_matches_polynomial_arithmetic() {
    let f = FieldSpec::new(2, 2).unwrap();
    // alpha * alpha = alpha + 1 under x^2 + x + 1
    assert_eq!(f.mul(2, 2), 3);
    assert_eq!(f.mul(2, 3), 1);
}

#[test]
fn gf5_inverse_of_three_is_two() {
    let f = FieldSpec::new(5, 1).unwrap();
    assert_eq!(f.inv(3).unwrap(), 2);
    assert!(matches!(f.inv(0), Err(Error::DivisionByZero)));
}

#[test]
fn default_modulus_is_deterministic() {
    let a = FieldSpec::new(2, 8).unwrap();
    let b = FieldSpec::new(2, 8).unwrap();
    assert_eq!(a.modulus(), b.modulus());
    assert_eq!(a, b);
}

#[test]
fn field_element_operators() {
    let f = FieldSpec::new(2, 2).unwrap();
    let a = f.elem(2);
    let b = f.elem(3);
    assert_eq!((a.clone() * b.clone()).repr(), 1);
    assert_eq!((a.clone() + b).repr(), 1);
    assert_eq!(a.inv().unwrap().repr(), 3);
}

#[test]
#[should_panic(expected = "different fields")]
fn mixed_field_arithmetic_panics() {
    let f = FieldSpec::new(2, 2).unwrap();
    let g = FieldSpec::new(3, 1).unwrap();
    let _ = f.elem(1) + g.elem(1);
}

#[test]
fn ext_to_base_coordinates_gf4() {
    let gf2 = FieldSpec::prime(2).unwrap();
    let gf4 = gf2.extension(2).unwrap();
    assert_eq!(gf4.ext_to_base(0, &gf2).unwrap().reprs(), &[0, 0]);
    assert_eq!(gf4.ext_to_base(2, &gf2).unwrap().reprs(), &[0, 1]);
    assert_eq!(gf4.ext_to_base(3, &gf2).unwrap().reprs(), &[1, 1]);
    for x in gf4.elements() {
        let coords = gf4.ext_to_base(x, &gf2).unwrap();
        assert_eq!(gf4.base_to_ext(&coords).unwrap(), x);
    }
}

#[test]
fn ext_to_base_is_linear_for_small_extensions() {
    let cases = [
        (FieldSpec::prime(2).unwrap(), 6),
        (FieldSpec::new(2, 2).unwrap(), 3),
        (FieldSpec::new(2, 3).unwrap(), 2),
        (FieldSpec::prime(3).unwrap(), 3),
    ];
    for (base, r) in cases {
        let ext = base.extension(r).unwrap();
        assert!(ext.q() <= 64);
        for u in ext.elements() {
            for v in ext.elements() {
                let lhs = ext.ext_to_base(ext.add(u, v), &base).unwrap();
                let rhs = ext
                    .ext_to_base(u, &base)
                    .unwrap()
                    .add(&ext.ext_to_base(v, &base).unwrap());
                assert_eq!(lhs, rhs, "additivity over {base} ^ {r}");
            }
        }
    }
}

#[test]
fn tower_field_arithmetic_is_consistent() {
    // GF(4)^3 = 64 elements via the tower backend-to-table path
    let gf4 = FieldSpec::new(2, 2).unwrap();
    let f64 = gf4.extension(3).unwrap();
    assert_eq!(f64.q(), 64);
    for a in f64.elements() {
        if a != 0 {
            assert_eq!(f64.mul(a, f64.inv(a).unwrap()), 1);
        }
        for b in f64.elements() {
            assert_eq!(
                f64.mul(f64.add(a, b), 3),
                f64.add(f64.mul(a, 3), f64.mul(b, 3))
            );
        }
    }
}

#[test]
fn large_binary_field_arithmetic() {
    let f = FieldSpec::new(2, 44).unwrap();
    assert_eq!(f.q(), 1 << 44);
    let mut x = 0x1234_5678_9abu64;
    for _ in 0..50 {
        x = x.wrapping_mul(0x9e37_79b9_7f4a_7c15) & ((1 << 44) - 1);
        if x == 0 {
            continue;
        }
        let inv = f.inv(x).unwrap();
        assert_eq!(f.mul(x, inv), 1);
        let y = x ^ 0xff;
        assert_eq!(f.mul(x, f.add(y, 1)), f.add(f.mul(x, y), x));
    }
}

#[test]
fn field_size_limits() {
    assert!(FieldSpec::new(2, 64).is_err());
    assert!(FieldSpec::new(2, 63).is_ok());
    // beyond the table limit, odd characteristics run on the generic backend
    let f = FieldSpec::new(3, 11).unwrap();
    assert_eq!(f.q(), 177147);
    for x in [1u64, 2, 5, 1000, 177146] {
        assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
    }
    assert_eq!(f.mul(f.add(7, 11), 5), f.add(f.mul(7, 5), f.mul(11, 5)));
}

#[test]
fn rref_examples() {
    let gf2 = FieldSpec::prime(2).unwrap();
    let id = FqMatrix::identity(gf2.clone(), 3);
    let (r, rank, pivots) = id.rref();
    assert_eq!(r, id);
    assert_eq!(rank, 3);
    assert_eq!(pivots, vec![0, 1, 2]);

    let m = FqMatrix::from_rows(
        gf2.clone(),
        &[vec![1, 1, 0, 0], vec![1, 0, 1, 0], vec![1, 1, 1, 1]],
    );
    assert_eq!(m.rank(), 3);

    let z = FqMatrix::zeros(gf2, 2, 4);
    assert_eq!(z.rank(), 0);
}

#[test]
fn kernel_examples() {
    let gf2 = FieldSpec::prime(2).unwrap();
    let id = FqMatrix::identity(gf2.clone(), 4);
    assert_eq!(id.kernel().rows(), 0);

    let ones = FqMatrix::from_rows(gf2.clone(), &[vec![1, 1, 1, 1]]);
    let k = ones.kernel();
    assert_eq!(k.rows(), 3);
    for r in 0..k.rows() {
        assert_eq!(k.row(r).iter().filter(|&&x| x != 0).count() % 2, 0);
    }

    let z = FqMatrix::zeros(gf2, 1, 2);
    assert_eq!(z.kernel().rows(), 2);
}

proptest! {
    #[test]
    fn rref_is_idempotent(seed in 0u64..500, rows in 1usize..6, cols in 1usize..7) {
        let f = FieldSpec::new(3, 1).unwrap();
        let mut x = seed;
        let mut next = || { x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); x >> 33 };
        let data: Vec<Vec<u64>> = (0..rows).map(|_| (0..cols).map(|_| next() % 3).collect()).collect();
        let m = FqMatrix::from_rows(f, &data);
        let (r1, rank1, _) = m.rref();
        let (r2, rank2, _) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(rank1, rank2);
    }

    #[test]
    fn rank_plus_nullity_is_cols(seed in 0u64..500, rows in 1usize..6, cols in 1usize..7) {
        for f in [FieldSpec::new(2, 1).unwrap(), FieldSpec::new(2, 2).unwrap(), FieldSpec::new(5, 1).unwrap()] {
            let q = f.q();
            let mut x = seed.wrapping_add(q);
            let mut next = || { x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); x >> 33 };
            let data: Vec<Vec<u64>> = (0..rows).map(|_| (0..cols).map(|_| next() % q).collect()).collect();
            let m = FqMatrix::from_rows(f.clone(), &data);
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.rows(), cols);
            // every kernel row really is in the null space
            for r in 0..k.rows() {
                let prod = m.mat_mul(&FqMatrix::from_rows(f.clone(), &[k.row(r).to_vec()]).transpose());
                prop_assert!(prod.is_zero());
            }
        }
    }
}
