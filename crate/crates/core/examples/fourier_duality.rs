//! Multiplication and convolution of 1-quons are exchanged by the string
//! Fourier transform.
//!
//! cargo run --example fourier_duality

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quon::fourier::{check_fourier_duality, fourier_duality_residual};
use quon::mtc::{fibonacci, ising};
use quon::quon::{convolution_unit, convolve, multiplication_unit, multiply, sft, Quon};

fn main() -> quon::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in [fibonacci(), ising()] {
        let x = Quon::random(&m, 1, &mut rng);
        let y = Quon::random(&m, 1, &mut rng);
        println!("{}", m.name());
        println!("  x            = {:?}", x.to_vec());
        println!("  x · y        = {:?}", multiply(&m, &x, &y)?.to_vec());
        println!("  x * y        = {:?}", convolve(&m, &x, &y)?.to_vec());
        println!("  residual of sft(xy) = sft(x) * sft(y): {:.2e}", fourier_duality_residual(&m, &x, &y)?);

        let one = multiplication_unit(&m);
        let e = convolution_unit(&m);
        println!("  sft(multiplication unit) - convolution unit: {:.2e}", sft(&m, &one)?.max_abs_diff(&e)?);
        let scaled = x.scale(Complex64::new(2.0, 0.0));
        println!("  unit laws: {:.2e} {:.2e}",
            multiply(&m, &scaled, &one)?.max_abs_diff(&scaled)?,
            convolve(&m, &scaled, &e)?.max_abs_diff(&scaled)?);

        let report = check_fourier_duality(&m, 100, 1, 1e-9)?;
        println!("  basis sweep + 100 random pairs: max residual {:.2e}\n", report.max_error());
    }
    Ok(())
}
