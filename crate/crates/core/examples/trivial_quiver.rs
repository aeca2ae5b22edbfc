//! The Gabriel quiver of one-dimensional bimodules over the trivial
//! algebra, in Graphviz form.

use leibniz::quiver::quiver_trivial;
use leibniz::Scalar;

fn main() -> anyhow::Result<()> {
    let q = quiver_trivial(&[Scalar::one()])?;
    println!("{}", q.to_dot());
    for v in &q.vertices {
        println!("{}: {} loops", v.label, q.multiplicity(&v.label, &v.label));
    }
    let wider = quiver_trivial(&[Scalar::one(), Scalar::new(-1, 2)])?;
    println!("\n{}", wider.to_json());
    Ok(())
}
