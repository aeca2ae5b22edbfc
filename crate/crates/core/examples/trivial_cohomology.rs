//! Leibniz cohomology of bimodules over the one-dimensional algebra with
//! zero bracket, brute force against the closed form.

use leibniz::algebra::trivial_algebra;
use leibniz::bimodule::Bimodule;
use leibniz::cohomology::{leibniz_cohomology, trivial_algebra_closed_form};
use leibniz::Mat;

fn main() -> anyhow::Result<()> {
    let h = trivial_algebra();
    let examples = [
        ("Jordan block, antisymmetric", Mat::from_i64(&[&[1, 1], &[0, 1]]), Mat::zeros(2, 2)),
        ("Jordan block, symmetric", Mat::from_i64(&[&[2, 1], &[0, 2]]), Mat::from_i64(&[&[-2, -1], &[0, -2]])),
        ("nonsplit extension", Mat::from_i64(&[&[0, 1], &[0, 0]]), Mat::from_i64(&[&[0, 1], &[0, 0]])),
        ("trivial, dim 3", Mat::zeros(3, 3), Mat::zeros(3, 3)),
    ];
    for (name, left, right) in examples {
        let m = Bimodule::new(&h, left.rows(), vec![left], vec![right])?;
        let brute = leibniz_cohomology(&h, &m, 5)?.dims();
        let closed = trivial_algebra_closed_form(&m, 5)?;
        assert_eq!(brute, closed);
        println!("{name:<28} HL = {brute:?}");
    }
    Ok(())
}
