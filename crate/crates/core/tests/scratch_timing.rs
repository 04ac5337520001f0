use nalgebra::DMatrix;
use std::time::Instant;

#[test]
fn svd_timing() {
    for n in [256usize, 512, 1024] {
        let h = spinfd::fwht::dense_hadamard(n).unwrap();
        let t0 = Instant::now();
        let g = &h * h.transpose();
        let t_gram = t0.elapsed();
        let t0 = Instant::now();
        let sv = h.clone().singular_values();
        let t_svd = t0.elapsed();
        let t0 = Instant::now();
        let eig = g.clone().symmetric_eigenvalues();
        let t_eig = t0.elapsed();
        println!(
            "n={n}: gram {:?}, svd {:?} (min {}), symeig {:?} (min {})",
            t_gram,
            t_svd,
            sv.min(),
            t_eig,
            eig.min()
        );
        let t0 = Instant::now();
        let lu = g.lu();
        let mut v = DMatrix::from_element(n, 1, 1.0);
        for _ in 0..20 {
            v = lu.solve(&v).unwrap();
            let norm = v.norm();
            v /= norm;
        }
        println!("n={n}: lu+invpow {:?}", t0.elapsed());
    }
}
