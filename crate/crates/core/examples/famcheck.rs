// scratch check
use rhspaces_core::families::{real_family, complex_family};
use rhspaces_core::exact::{Matrix, Scalar};
use rhspaces_core::rh::rho_int;
use rhspaces_core::Field;

fn check<S: Scalar>(fam_gens: &[Matrix<S>], m: usize, want: u64, label: &str) {
    assert_eq!(fam_gens.len() as u64, want, "{label}: generator count");
    let id = Matrix::<S>::identity(m);
    let neg = id.neg();
    for (i, j) in fam_gens.iter().enumerate() {
        assert_eq!(j.conjugate_transpose(), j.neg(), "{label} skew {i}");
        assert_eq!(j.mul(j).unwrap(), neg, "{label} square {i}");
        for l in fam_gens.iter().skip(i + 1) {
            assert_eq!(j.mul(l).unwrap(), l.mul(j).unwrap().neg(), "{label} anticommute");
        }
    }
    println!("{label}: ok ({} generators)", fam_gens.len());
}

fn main() {
    for m in [1usize, 2, 4, 8, 16, 32, 64, 128, 3, 6, 12, 24, 48] {
        let fam = real_family(m).unwrap();
        let want = rho_int(m as u64, Field::Real).unwrap() - 1;
        check(fam.generators(), m, want, &format!("real m={m}"));
    }
    for m in [1usize, 2, 4, 8, 16, 3, 6, 12] {
        let fam = complex_family(m).unwrap();
        let want = rho_int(m as u64, Field::Complex).unwrap() - 1;
        check(fam.generators(), m, want, &format!("complex m={m}"));
    }
}
