//! Monte Carlo simulation of the network model.
//!
//! Nothing here calls a closed-form expression: node positions come from
//! Poisson point processes on a finite disc, channels are drawn explicitly,
//! and each trial reports whether the outage event occurred. Trials use
//! independent ChaCha8 streams keyed by `(seed, trial index)`, so any
//! partition of the trial range, in any order, yields the same hit count.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_SQRT_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Gamma, Poisson, StandardNormal};

use crate::beamforming::InterferencePdfSpec;
use crate::model::{NetworkParams, PowerSplit};
use crate::{Error, Result};

/// Smallest accepted trial count.
pub const MIN_TRIALS: u64 = 100;
/// Default trial count.
pub const DEFAULT_TRIALS: u64 = 100_000;
/// Default truncation-bias tolerance.
pub const DEFAULT_DELTA_TRUNC: f64 = 1e-3;
/// Window radius cap, in multiples of the link distance.
pub const MAX_WINDOW_FACTOR: f64 = 2000.0;

const WILSON_Z: f64 = 1.959_963_984_540_054;

/// Disc on which the point processes are realized.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimWindow {
    radius: f64,
}

impl SimWindow {
    /// A window of the given radius; must be at least `10 r`.
    pub fn new(radius: f64, r: f64) -> Result<Self> {
        if !(radius.is_finite() && radius >= 10.0 * r) {
            return Err(Error::domain(
                "window",
                radius,
                "must be finite and at least 10 times the link distance",
            ));
        }
        Ok(SimWindow { radius })
    }

    /// Default window: `max(50 r, R_δ)`, where `R_δ` is the radius at which
    /// the mean interference from outside the disc,
    /// `2πλ_l P R^{2−α}/(α − 2)`, falls below `δ_trunc · P r^{−α}`, the mean
    /// received power of the intended link. Capped at `2000 r`.
    pub fn for_params(params: &NetworkParams, delta_trunc: f64) -> Self {
        let a = params.alpha().get();
        let r = params.r();
        let rd = libm::pow(
            2.0 * PI * params.lambda_l() * libm::pow(r, a) / ((a - 2.0) * delta_trunc),
            1.0 / (a - 2.0),
        );
        let mut radius = (50.0 * r).max(rd);
        if radius > MAX_WINDOW_FACTOR * r || !radius.is_finite() {
            log::warn!(
                "window radius {rd:.3e} needed for the truncation bound is capped at {:.3e}",
                MAX_WINDOW_FACTOR * r
            );
            radius = MAX_WINDOW_FACTOR * r;
        }
        SimWindow { radius }
    }

    /// Disc radius.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Mean interference from nodes outside the disc, relative to the mean
    /// intended-link power.
    pub fn truncation_bias(&self, params: &NetworkParams) -> f64 {
        let a = params.alpha().get();
        2.0 * PI * params.lambda_l() * libm::pow(self.radius, 2.0 - a) / (a - 2.0)
            * libm::pow(params.r(), a)
    }
}

/// Trial count, seed and window of one estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McConfig {
    /// Number of independent trials (at least [`MIN_TRIALS`]).
    pub trials: u64,
    /// Base seed.
    pub seed: u64,
    /// Simulation window.
    pub window: SimWindow,
    /// Truncation-bias tolerance used to size the default window.
    pub delta_trunc: f64,
}

impl McConfig {
    /// Config with the default window for `params`.
    pub fn new(params: &NetworkParams, trials: u64, seed: u64) -> Result<Self> {
        Self::with_delta(params, trials, seed, DEFAULT_DELTA_TRUNC)
    }

    /// Config with the default window for a custom bias tolerance.
    pub fn with_delta(
        params: &NetworkParams,
        trials: u64,
        seed: u64,
        delta_trunc: f64,
    ) -> Result<Self> {
        if trials < MIN_TRIALS {
            return Err(Error::domain(
                "trials",
                trials as f64,
                "must be at least 100",
            ));
        }
        if !(delta_trunc > 0.0 && delta_trunc < 1.0) {
            return Err(Error::domain(
                "delta_trunc",
                delta_trunc,
                "must lie in (0, 1)",
            ));
        }
        let window = SimWindow::for_params(params, delta_trunc);
        log::debug!(
            "window radius {:.3} (truncation bias {:.2e})",
            window.radius(),
            window.truncation_bias(params)
        );
        Ok(McConfig {
            trials,
            seed,
            window,
            delta_trunc,
        })
    }

    /// Same config with an explicit window.
    pub fn with_window(self, window: SimWindow) -> Self {
        McConfig { window, ..self }
    }
}

/// Frequency estimate of an outage probability.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    /// Fraction of trials in outage.
    pub p_hat: f64,
    /// `sqrt(p̂(1 − p̂)/trials)`.
    pub std_err: f64,
    /// Wilson 95% interval.
    pub ci95: (f64, f64),
    /// Trial count.
    pub trials: u64,
    /// Base seed.
    pub seed: u64,
}

impl McEstimate {
    /// Estimate from a hit count.
    pub fn from_count(hits: u64, trials: u64, seed: u64) -> Self {
        let n = trials as f64;
        let p = hits as f64 / n;
        let z2 = WILSON_Z * WILSON_Z;
        let denom = 1.0 + z2 / n;
        let center = (p + z2 / (2.0 * n)) / denom;
        let half = WILSON_Z / denom * libm::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
        McEstimate {
            p_hat: p,
            std_err: libm::sqrt(p * (1.0 - p) / n),
            ci95: (
                (center - half).max(0.0).min(p),
                (center + half).min(1.0).max(p),
            ),
            trials,
            seed,
        }
    }
}

/// RNG of trial `index`: ChaCha8 seeded from `seed`, stream `index`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn poisson_count<R: Rng + ?Sized>(mean: f64, rng: &mut R) -> u64 {
    if mean <= 0.0 {
        return 0;
    }
    let d = Poisson::new(mean).expect("positive finite mean");
    d.sample(rng) as u64
}

fn uniform_in_disc<R: Rng + ?Sized>(radius: f64, rng: &mut R) -> (f64, f64) {
    let rho = radius * libm::sqrt(rng.random::<f64>());
    let th = 2.0 * PI * rng.random::<f64>();
    (rho * libm::cos(th), rho * libm::sin(th))
}

/// Homogeneous Poisson point process of `density` on a disc of `radius`
/// centred at the origin.
pub fn sample_ppp<R: Rng + ?Sized>(density: f64, radius: f64, rng: &mut R) -> Vec<(f64, f64)> {
    let count = poisson_count(density * PI * radius * radius, rng);
    (0..count).map(|_| uniform_in_disc(radius, rng)).collect()
}

fn exp1<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    Exp1.sample(rng)
}

/// Circularly-symmetric complex Gaussian entry with unit variance.
fn cn<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    (re * FRAC_1_SQRT_2, im * FRAC_1_SQRT_2)
}

/// Power seen by an unintended receiver: the transmitter's channel is
/// rotated to `[1, 0, …, 0]`, so the first entry of a fresh channel carries
/// the information signal and the remaining `N − 1` carry noise.
pub fn sample_interference_power<R: Rng + ?Sized>(spec: &InterferencePdfSpec, rng: &mut R) -> f64 {
    let (a, b) = cn(rng);
    let mut noise = 0.0;
    for _ in 1..spec.n().get() {
        let (c, d) = cn(rng);
        noise += c * c + d * d;
    }
    spec.p_info() * (a * a + b * b) + spec.sigma_v() * noise
}

/// Which outage event a trial checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// Sectoring, connection outage.
    SectoringPco,
    /// Sectoring, secrecy outage.
    SectoringPso,
    /// Beamforming, connection outage.
    BeamformingPco,
    /// Beamforming, secrecy outage.
    BeamformingPso,
}

/// A fully specified simulation: scenario, network, split, threshold and
/// window.
#[derive(Clone, Copy, Debug)]
pub struct Experiment {
    scenario: Scenario,
    params: NetworkParams,
    split: PowerSplit,
    beta: f64,
    radius: f64,
}

impl Experiment {
    /// Validates the threshold and bundles the inputs.
    pub fn new(
        scenario: Scenario,
        params: NetworkParams,
        split: PowerSplit,
        beta: f64,
        window: SimWindow,
    ) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::domain("beta", beta, "must be positive and finite"));
        }
        Ok(Experiment {
            scenario,
            params,
            split,
            beta,
            radius: window.radius(),
        })
    }

    /// Runs one trial; `true` when the outage event occurs.
    pub fn trial<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        match self.scenario {
            Scenario::SectoringPco => self.sectoring_pco(rng),
            Scenario::SectoringPso => self.sectoring_pso(rng),
            Scenario::BeamformingPco => self.beamforming_pco(rng),
            Scenario::BeamformingPso => self.beamforming_pso(rng),
        }
    }

    /// Number of outage trials among indices `range`.
    pub fn count(&self, seed: u64, range: core::ops::Range<u64>) -> u64 {
        range
            .filter(|&i| self.trial(&mut trial_rng(seed, i)))
            .count() as u64
    }

    fn path_gain(&self, d2: f64) -> f64 {
        libm::pow(d2, -0.5 * self.params.alpha().get())
    }

    fn sectoring_pco<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        let n = self.params.n().as_f64();
        let p_i = self.split.p_info();
        let sigma_a = self.split.p_noise() / (n - 1.0);
        let r = self.params.r();
        let budget = p_i * exp1(rng) * self.path_gain(r * r) / self.beta;
        let count = poisson_count(self.params.lambda_l() * PI * self.radius * self.radius, rng);
        let mut interference = 0.0;
        let mut outage = false;
        for _ in 0..count {
            let (x, y) = uniform_in_disc(self.radius, rng);
            let s = exp1(rng);
            let power = if rng.random::<f64>() < 1.0 / n {
                p_i
            } else {
                sigma_a
            };
            interference += power * s * self.path_gain(x * x + y * y);
            if interference >= budget {
                outage = true;
            }
        }
        outage
    }

    fn sectoring_pso<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        let le = self.params.lambda_e();
        if le == 0.0 {
            return false;
        }
        if self.split.p_noise() == 0.0 {
            // Eavesdroppers in the unbounded sector exist almost surely and
            // see no interference.
            return true;
        }
        let n = self.params.n().as_f64();
        let half = PI / n;
        let p_i = self.split.p_info();
        let sigma_a = self.split.p_noise() / (n - 1.0);
        // Eavesdroppers in the typical transmitter's information sector,
        // centred on angle 0.
        let ne = poisson_count(le * PI * self.radius * self.radius / n, rng);
        let eves: Vec<(f64, f64)> = (0..ne)
            .map(|_| {
                let rho = self.radius * libm::sqrt(rng.random::<f64>());
                let th = (2.0 * rng.random::<f64>() - 1.0) * half;
                (rho * libm::cos(th), rho * libm::sin(th))
            })
            .collect();
        let r2 = 2.0 * self.radius;
        let ni = poisson_count(self.params.lambda_l() * PI * r2 * r2, rng);
        let tx: Vec<(f64, f64, f64)> = (0..ni)
            .map(|_| {
                let (x, y) = uniform_in_disc(r2, rng);
                (x, y, 2.0 * PI * rng.random::<f64>())
            })
            .collect();
        for &(zx, zy) in &eves {
            let budget = p_i * exp1(rng) * self.path_gain(zx * zx + zy * zy) / self.beta;
            let mut interference = 0.0;
            let mut jammed = false;
            for &(x, y, orient) in &tx {
                let (dx, dy) = (zx - x, zy - y);
                let rel = libm::atan2(dy, dx) - orient;
                let rel = rel - 2.0 * PI * libm::floor((rel + PI) / (2.0 * PI));
                if rel.abs() <= half {
                    // z lies in x's information sector: no noise towards it.
                    continue;
                }
                interference += sigma_a * exp1(rng) * self.path_gain(dx * dx + dy * dy);
                if interference >= budget {
                    jammed = true;
                    break;
                }
            }
            if !jammed {
                return true;
            }
        }
        false
    }

    fn beamforming_pco<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        let n = self.params.n().get() as usize;
        let p_i = self.split.p_info();
        let sigma_v = self.split.p_noise() / (n as f64 - 1.0);
        let r = self.params.r();
        let mut own = 0.0;
        for _ in 0..n {
            let (a, b) = cn(rng);
            own += a * a + b * b;
        }
        let budget = p_i * own * self.path_gain(r * r) / self.beta;
        let count = poisson_count(self.params.lambda_l() * PI * self.radius * self.radius, rng);
        let mut h: Vec<(f64, f64)> = alloc::vec![(0.0, 0.0); n];
        let mut interference = 0.0;
        let mut outage = false;
        for _ in 0..count {
            let (x, y) = uniform_in_disc(self.radius, rng);
            // Interferer's own intended channel h and cross channel g.
            let mut hn = 0.0;
            for e in h.iter_mut() {
                *e = cn(rng);
                hn += e.0 * e.0 + e.1 * e.1;
            }
            let (mut ip_re, mut ip_im, mut gn) = (0.0, 0.0, 0.0);
            for e in &h {
                let g = cn(rng);
                // conj(h) · g
                ip_re += e.0 * g.0 + e.1 * g.1;
                ip_im += e.0 * g.1 - e.1 * g.0;
                gn += g.0 * g.0 + g.1 * g.1;
            }
            let along = (ip_re * ip_re + ip_im * ip_im) / hn;
            let perp = (gn - along).max(0.0);
            interference += (p_i * along + sigma_v * perp) * self.path_gain(x * x + y * y);
            if interference >= budget {
                outage = true;
            }
        }
        outage
    }

    fn beamforming_pso<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        let le = self.params.lambda_e();
        if le == 0.0 {
            return false;
        }
        if self.split.p_noise() == 0.0 {
            return true;
        }
        let n = self.params.n().as_f64();
        let p_i = self.split.p_info();
        let sigma_v = self.split.p_noise() / (n - 1.0);
        let noise_gain = Gamma::new(n - 1.0, 1.0).expect("shape n - 1 >= 1");
        let eves = sample_ppp(le, self.radius, rng);
        let tx = sample_ppp(self.params.lambda_l(), 2.0 * self.radius, rng);
        for &(zx, zy) in &eves {
            let pg = self.path_gain(zx * zx + zy * zy);
            let signal = p_i * exp1(rng) * pg;
            let own = sigma_v * noise_gain.sample(rng) * pg;
            let budget = signal / self.beta - own;
            if budget <= 0.0 {
                continue;
            }
            let mut interference = 0.0;
            let mut jammed = false;
            for &(x, y) in &tx {
                let (dx, dy) = (zx - x, zy - y);
                interference +=
                    sigma_v * noise_gain.sample(rng) * self.path_gain(dx * dx + dy * dy);
                if interference >= budget {
                    jammed = true;
                    break;
                }
            }
            if !jammed {
                return true;
            }
        }
        false
    }
}

/// Runs all trials of `experiment` sequentially.
pub fn run(experiment: &Experiment, cfg: &McConfig) -> McEstimate {
    let hits = experiment.count(cfg.seed, 0..cfg.trials);
    McEstimate::from_count(hits, cfg.trials, cfg.seed)
}

fn simulate(
    scenario: Scenario,
    params: &NetworkParams,
    split: &PowerSplit,
    beta: f64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    let e = Experiment::new(scenario, *params, *split, beta, cfg.window)?;
    Ok(run(&e, cfg))
}

/// Sectoring connection outage estimate.
pub fn sim_sectoring_pco(
    params: &NetworkParams,
    split: &PowerSplit,
    beta_b: f64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    simulate(Scenario::SectoringPco, params, split, beta_b, cfg)
}

/// Sectoring secrecy outage estimate.
pub fn sim_sectoring_pso(
    params: &NetworkParams,
    split: &PowerSplit,
    beta_e: f64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    simulate(Scenario::SectoringPso, params, split, beta_e, cfg)
}

/// Beamforming connection outage estimate.
pub fn sim_beamforming_pco(
    params: &NetworkParams,
    split: &PowerSplit,
    beta_b: f64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    simulate(Scenario::BeamformingPco, params, split, beta_b, cfg)
}

/// Beamforming secrecy outage estimate.
pub fn sim_beamforming_pso(
    params: &NetworkParams,
    split: &PowerSplit,
    beta_e: f64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    simulate(Scenario::BeamformingPso, params, split, beta_e, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn net(n: u32) -> NetworkParams {
        NetworkParams::new(0.01, 0.001, 1.0, 4.0, n, 1.0).unwrap()
    }
    fn split(phi: f64) -> PowerSplit {
        PowerSplit::new(phi, 1.0).unwrap()
    }

    #[test]
    fn wilson_interval_properties() {
        let e = McEstimate::from_count(30, 1000, 7);
        assert_relative_eq!(e.std_err, libm::sqrt(0.03 * 0.97 / 1000.0));
        assert!(e.ci95.0 <= e.p_hat && e.p_hat <= e.ci95.1);
        let zero = McEstimate::from_count(0, 1000, 7);
        assert_eq!(zero.ci95.0, 0.0);
        assert!(zero.ci95.1 > 0.0);
        let wide = McEstimate::from_count(300, 1000, 0);
        let narrow = McEstimate::from_count(1200, 4000, 0);
        let w = |e: McEstimate| e.ci95.1 - e.ci95.0;
        assert!((w(wide) / w(narrow) - 2.0).abs() < 0.05);
    }

    #[test]
    fn config_validation() {
        let p = net(4);
        assert!(McConfig::new(&p, 10, 1).is_err());
        let cfg = McConfig::new(&p, 1000, 1).unwrap();
        assert!(cfg.window.radius() >= 50.0);
        assert!(cfg.window.truncation_bias(&p) < DEFAULT_DELTA_TRUNC);
        assert!(SimWindow::new(5.0, 1.0).is_err());
        let p3 = p.with_alpha(3.0).unwrap();
        let w3 = SimWindow::for_params(&p3, 1e-3);
        assert!(w3.truncation_bias(&p3) <= 1e-3 * (1.0 + 1e-9));
    }

    #[test]
    fn trial_streams_are_independent_of_order() {
        let p = net(4);
        let cfg = McConfig::new(&p, 2000, 99).unwrap();
        let e = Experiment::new(Scenario::BeamformingPco, p, split(0.5), 3.0, cfg.window).unwrap();
        let whole = e.count(99, 0..2000);
        let parts = e.count(99, 1000..2000) + e.count(99, 0..500) + e.count(99, 500..1000);
        assert_eq!(whole, parts);
        let mut a = trial_rng(5, 3);
        let mut b = trial_rng(5, 3);
        let mut c = trial_rng(5, 4);
        let (x, y, z): (u64, u64, u64) = (a.random(), b.random(), c.random());
        assert_eq!(x, y);
        assert_ne!(x, z);
    }

    #[test]
    fn ppp_counts() {
        assert!(sample_ppp(0.0, 10.0, &mut trial_rng(1, 0)).is_empty());
        let mean = 0.05 * PI * 100.0;
        let draws = 10_000u64;
        let mut sum = 0.0;
        let mut pts_inside = true;
        for i in 0..draws {
            let pts = sample_ppp(0.05, 10.0, &mut trial_rng(2, i));
            pts_inside &= pts.iter().all(|&(x, y)| x * x + y * y <= 100.0);
            sum += pts.len() as f64;
        }
        let se = libm::sqrt(mean / draws as f64);
        assert!((sum / draws as f64 - mean).abs() < 3.0 * se);
        assert!(pts_inside);
    }

    #[test]
    fn ppp_half_discs_independent() {
        // 2x2 contingency of (left count above median, right count above median).
        let mut table = [[0.0f64; 2]; 2];
        let draws = 10_000;
        for i in 0..draws {
            let pts = sample_ppp(0.05, 10.0, &mut trial_rng(3, i));
            let left = pts.iter().filter(|p| p.0 < 0.0).count();
            let right = pts.len() - left;
            table[(left > 7) as usize][(right > 7) as usize] += 1.0;
        }
        let n = draws as f64;
        let rows = [table[0][0] + table[0][1], table[1][0] + table[1][1]];
        let cols = [table[0][0] + table[1][0], table[0][1] + table[1][1]];
        let mut chi2 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let e = rows[i] * cols[j] / n;
                chi2 += (table[i][j] - e) * (table[i][j] - e) / e;
            }
        }
        // 1% critical value, one degree of freedom.
        assert!(chi2 < 6.635, "chi2 = {chi2}");
    }

    #[test]
    fn interference_power_mean_is_total_power() {
        for &(n, phi) in &[(2u32, 0.9), (4, 0.25), (8, 0.5)] {
            let spec = InterferencePdfSpec::new(phi, 1.0, n).unwrap();
            let k = 100_000u64;
            let mut rng = trial_rng(11, n as u64);
            let xs: Vec<f64> = (0..k)
                .map(|_| sample_interference_power(&spec, &mut rng))
                .collect();
            let m = xs.iter().sum::<f64>() / k as f64;
            let v = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (k as f64 - 1.0);
            assert!(
                (m - 1.0).abs() < 3.0 * libm::sqrt(v / k as f64),
                "N {n}: {m}"
            );
        }
    }

    #[test]
    fn degenerate_limits() {
        let p = net(4);
        let cfg = McConfig::new(&p, 500, 3).unwrap();
        let quiet = p.with_lambda_e(0.0).unwrap();
        assert_eq!(
            sim_sectoring_pso(&quiet, &split(0.5), 1.0, &cfg)
                .unwrap()
                .p_hat,
            0.0
        );
        assert_eq!(
            sim_beamforming_pso(&quiet, &split(0.5), 1.0, &cfg)
                .unwrap()
                .p_hat,
            0.0
        );
        assert_eq!(
            sim_sectoring_pso(&p, &split(1.0), 1.0, &cfg).unwrap().p_hat,
            1.0
        );
        assert_eq!(
            sim_beamforming_pso(&p, &split(1.0), 1.0, &cfg)
                .unwrap()
                .p_hat,
            1.0
        );
        let sparse = p.with_lambda_l(1e-12).unwrap();
        let cfg_s = McConfig::new(&sparse, 500, 3).unwrap();
        assert_eq!(
            sim_sectoring_pco(&sparse, &split(0.5), 1.0, &cfg_s)
                .unwrap()
                .p_hat,
            0.0
        );
        assert_eq!(
            sim_sectoring_pco(&p, &split(0.5), 1e-12, &cfg)
                .unwrap()
                .p_hat,
            0.0
        );
        assert!(sim_sectoring_pco(&p, &split(0.5), 0.0, &cfg).is_err());
    }

    #[test]
    fn sequential_runs_are_reproducible() {
        let p = net(4);
        let cfg = McConfig::new(&p, 500, 42).unwrap();
        let a = sim_sectoring_pso(&p, &split(0.5), 1.0, &cfg).unwrap();
        let b = sim_sectoring_pso(&p, &split(0.5), 1.0, &cfg).unwrap();
        assert_eq!(a, b);
        assert!((0.0..=1.0).contains(&a.p_hat));
    }
}
