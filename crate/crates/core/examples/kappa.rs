//! kappa_inf by three routes, and rho_inf.
use genus_one::topology;

fn main() -> genus_one::Result<()> {
    for n in 4..=10 {
        let [closed, via_abc, via_chern] = topology::kappa_routes(n)?;
        let (_, rho) = topology::kappa_rho(n)?;
        println!("n={n}: kappa = {closed} = {via_abc} = {via_chern}, rho = {rho}");
    }
    Ok(())
}
