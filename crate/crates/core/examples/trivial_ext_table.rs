//! Ext groups between the one-dimensional bimodules `K`, `M^a_λ`, `M^s_λ`
//! over the trivial algebra, closed form and spectral sequences side by side.

use leibniz::bimodule::OneDimBimodule;
use leibniz::ext::{ext_trivial_closed, ext_trivial_spectral};
use leibniz::Scalar;

fn main() -> anyhow::Result<()> {
    let simples = vec![
        OneDimBimodule::trivial(),
        OneDimBimodule::antisymmetric(Scalar::one())?,
        OneDimBimodule::symmetric(Scalar::one())?,
        OneDimBimodule::antisymmetric(Scalar::from(2))?,
    ];
    for a in &simples {
        for b in &simples {
            let closed = ext_trivial_closed(a, b, 4);
            let spectral = ext_trivial_spectral(a, b, 4)?;
            assert_eq!(closed, spectral.dims);
            println!("Ext*({a}, {b}) = {closed:?}");
        }
    }
    let r = ext_trivial_spectral(&simples[0], &simples[0], 3)?;
    println!("\nE2 page for (K, K):\n{}", r.page);
    Ok(())
}
