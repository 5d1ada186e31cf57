//! Building blocks: eta, Jacobi thetas (sum and product forms) and Eisenstein series.

use twistvoa::io::pretty_series;
use twistvoa::modforms::{
    dedekind_eta, eisenstein, jacobi_theta, jacobi_theta_product, theta_bar, twisted_eisenstein, ThetaKind, TwistPair,
};
use twistvoa::{rat, Monomial, Rat};

fn main() -> twistvoa::Result<()> {
    let trunc = Rat::int(12);
    println!("eta        = {}", pretty_series(&dedekind_eta(&trunc)));

    let z = Monomial::new(rat(1, 3), rat(1, 4));
    for i in 1..=4 {
        let kind = ThetaKind::from_index(i)?;
        let sum = jacobi_theta(kind, &z, &Rat::one(), &trunc)?;
        let prod = jacobi_theta_product(kind, &z, &Rat::one(), &trunc)?;
        println!("theta_{i}(e^(2πi/3) q^(1/4)): sum == product: {}", sum.agrees_with(&prod));
    }

    println!("E_4        = {}", pretty_series(&eisenstein(4, &trunc)?));
    println!("E_6        = {}", pretty_series(&eisenstein(6, &trunc)?));
    let tw = TwistPair { lambda: rat(1, 2), theta: Monomial::new(Rat::zero(), Rat::zero()) };
    println!("E_2[-1;1]  = {}", pretty_series(&twisted_eisenstein(2, &tw, &trunc)?));
    println!("Theta(1,1) = {}", pretty_series(&theta_bar(1, 1, &trunc)));
    Ok(())
}
