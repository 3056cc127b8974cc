//! Scratch probe for benchmark calibration (not part of the deliverable).

use std::time::Instant;

use swarmlead::evaluation::{
    analysis_subset, build_ranking_report, leadership_histogram, true_leaders_of,
};
use swarmlead::methods::{netinfer, te, tlmi, MethodKind, NetInferConfig, TeConfig, TlmiConfig};
use swarmlead::sim::{VicsekConfig, VicsekSim, WolfSheepConfig, WolfSheepSim};
use swarmlead::trajectory::Role;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mode = args.get(1).map(String::as_str).unwrap_or("wolf");

    if mode == "scan" {
        let wolf_roles = [Role::Alpha, Role::Pack, Role::Independent];
        for &patrol_turn in &[10.0, 20.0, 30.0] {
            for &pack_jitter in &[0.0, 10.0, 20.0, 30.0, 45.0] {
                let mut ranks = Vec::new();
                let mut ordering_ok = 0;
                for seed in 1..=6u64 {
                    let ts = WolfSheepSim::run(WolfSheepConfig {
                        seed,
                        patrol_turn,
                        pack_jitter,
                        ..Default::default()
                    })
                    .unwrap();
                    let analyzed = analysis_subset(&ts, Some(&wolf_roles));
                    let leaders = true_leaders_of(&ts);
                    let kin = analyzed.derive_kinematics().unwrap();
                    let subset = analyzed.agent_ids();
                    let out =
                        netinfer::infer_kinematics(&kin, &NetInferConfig::default()).unwrap();
                    let report = build_ranking_report(
                        MethodKind::NetInfer,
                        seed,
                        &out.matrix,
                        &subset,
                        &leaders,
                    )
                    .unwrap();
                    ranks.push(report.rank_of(swarmlead::AgentId(100)).unwrap());
                    let hist = leadership_histogram(&out.events, &subset);
                    let alpha_count = hist.iter().find(|h| h.agent.0 == 100).unwrap().count;
                    let mut pack: Vec<u64> = hist
                        .iter()
                        .filter(|h| (101..=114).contains(&h.agent.0))
                        .map(|h| h.count)
                        .collect();
                    pack.sort();
                    let mut ind: Vec<u64> = hist
                        .iter()
                        .filter(|h| (115..=129).contains(&h.agent.0))
                        .map(|h| h.count)
                        .collect();
                    ind.sort();
                    if alpha_count > pack[pack.len() / 2] && pack[pack.len() / 2] > ind[ind.len() / 2]
                    {
                        ordering_ok += 1;
                    }
                }
                println!(
                    "patrol_turn {patrol_turn:4} pack_jitter {pack_jitter:4}: alpha ranks {ranks:?} ordering {ordering_ok}/6"
                );
            }
        }
        return;
    }

    if mode == "corr" {
        // Per-variable lag-1 correlation structure by pair group, one seed.
        use swarmlead::methods::lagged_pearson;
        use swarmlead::trajectory::{unwrap_heading, Variable};
        let patrol_turn: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(20.0);
        let pack_jitter: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(20.0);
        let trigger: f64 = args.get(4).and_then(|s| s.parse().ok()).unwrap_or(0.02);
        let ts = WolfSheepSim::run(WolfSheepConfig {
            seed: 3,
            patrol_turn,
            pack_jitter,
            trigger_prob: trigger,
            ..Default::default()
        })
        .unwrap();
        let analyzed = analysis_subset(&ts, Some(&[Role::Alpha, Role::Pack, Role::Independent]));
        let kin = analyzed.derive_kinematics().unwrap();
        let ids = analyzed.agent_ids();
        let w = 50usize;
        let lag = 1usize;
        for &var in &Variable::ALL {
            let mut stats: std::collections::BTreeMap<&str, (f64, usize, usize)> =
                Default::default();
            for t0 in (0..).map(|k| k * w).take_while(|t| t + w + lag <= kin.len()) {
                for (ai, &a) in ids.iter().enumerate() {
                    for (bi, &b) in ids.iter().enumerate() {
                        if ai == bi {
                            continue;
                        }
                        let group = match (a.0, b.0) {
                            (100, 101..=114) => "alpha->pack",
                            (101..=114, 100) => "pack->alpha",
                            (101..=114, 101..=114) => "pack->pack",
                            (115..=129, _) | (_, 115..=129) => "indep-any",
                            _ => "other",
                        };
                        let sa = &kin.series_at(ai).channel(var)[t0..t0 + w + lag];
                        let sb = &kin.series_at(bi).channel(var)[t0..t0 + w + lag];
                        let (ua, ub);
                        let (sa, sb) = if var == Variable::Heading {
                            ua = unwrap_heading(sa);
                            ub = unwrap_heading(sb);
                            (&ua[..], &ub[..])
                        } else {
                            (sa, sb)
                        };
                        if let Ok(Some(r)) = lagged_pearson(sa, sb, lag) {
                            let e = stats.entry(group).or_insert((0.0, 0, 0));
                            e.0 += r;
                            e.1 += 1;
                            if r > 0.85 {
                                e.2 += 1;
                            }
                        }
                    }
                }
            }
            println!("variable {var}:");
            for (g, (sum, n, pass)) in &stats {
                println!(
                    "  {g:12} mean r {:6.3}  pass {:5}/{:5} ({:.1}%)",
                    sum / *n as f64,
                    pass,
                    n,
                    100.0 * *pass as f64 / *n as f64
                );
            }
        }
        return;
    }

    if mode == "vscan" {
        // netinfer-only sweep over vicsek free parameters.
        let worlds: Vec<f64> = args
            .get(2)
            .map(|s| s.split(',').map(|v| v.parse().unwrap()).collect())
            .unwrap_or_else(|| vec![150.0, 200.0, 250.0]);
        let noises: Vec<f64> = args
            .get(3)
            .map(|s| s.split(',').map(|v| v.parse().unwrap()).collect())
            .unwrap_or_else(|| vec![10.0]);
        let strides: Vec<usize> = args
            .get(4)
            .map(|s| s.split(',').map(|v| v.parse().unwrap()).collect())
            .unwrap_or_else(|| vec![100]);
        let align = args.get(5).map(|s| s == "alignquiet").unwrap_or(false);
        for &world in &worlds {
            for &noise in &noises {
                for &stride in &strides {
                    let seed_base: u64 = std::env::var("SEED_BASE")
                        .ok()
                        .and_then(|s| s.parse().ok())
                        .unwrap_or(0);
                    let mut hits = 0;
                    let mut total = 0;
                    for seed in (seed_base + 1)..=(seed_base + 10) {
                        let ts = VicsekSim::run(VicsekConfig {
                            seed,
                            world_size: world,
                            noise_half_angle: noise,
                            leaders_align: align,
                            leader_noise: !align,
                            ..Default::default()
                        })
                        .unwrap();
                        let analyzed = analysis_subset(&ts, None);
                        let leaders = true_leaders_of(&ts);
                        let kin = analyzed.derive_kinematics().unwrap();
                        let subset = analyzed.agent_ids();
                        let out = netinfer::infer_kinematics(
                            &kin,
                            &NetInferConfig {
                                window: 100,
                                stride: Some(stride),
                                ..Default::default()
                            },
                        )
                        .unwrap();
                        let rep = build_ranking_report(
                            MethodKind::NetInfer,
                            seed,
                            &out.matrix,
                            &subset,
                            &leaders,
                        )
                        .unwrap();
                        for r in &rep.true_leader_ranks {
                            total += 1;
                            if r.rank <= 5 {
                                hits += 1;
                            }
                        }
                    }
                    println!(
                        "world {world:5} noise {noise:4} stride {stride:4}: netinfer top-5 {hits}/{total} = {:.0}%",
                        100.0 * hits as f64 / total as f64
                    );
                }
            }
        }
        return;
    }

    if mode == "vcorr" {
        use swarmlead::methods::lagged_pearson;
        use swarmlead::trajectory::{unwrap_heading, Variable};
        let world: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(100.0);
        let noise: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(10.0);
        let ts = VicsekSim::run(VicsekConfig {
            seed: 3,
            world_size: world,
            noise_half_angle: noise,
            ..Default::default()
        })
        .unwrap();
        let kin = ts.derive_kinematics().unwrap();
        let ids = ts.agent_ids();
        let w = 100usize;
        let lag = 1usize;
        for &var in &Variable::ALL {
            let mut stats: std::collections::BTreeMap<&str, (f64, usize, usize)> =
                Default::default();
            for t0 in (0..).map(|k| k * w).take_while(|t| t + w + lag <= kin.len()) {
                for (ai, &a) in ids.iter().enumerate() {
                    for (bi, &b) in ids.iter().enumerate() {
                        if ai == bi {
                            continue;
                        }
                        let group = match (a.0 < 5, b.0 < 5) {
                            (true, false) => "lead->foll",
                            (false, true) => "foll->lead",
                            (false, false) => "foll->foll",
                            (true, true) => "lead->lead",
                        };
                        let sa = &kin.series_at(ai).channel(var)[t0..t0 + w + lag];
                        let sb = &kin.series_at(bi).channel(var)[t0..t0 + w + lag];
                        let (ua, ub);
                        let (sa, sb) = if var == Variable::Heading {
                            ua = unwrap_heading(sa);
                            ub = unwrap_heading(sb);
                            (&ua[..], &ub[..])
                        } else {
                            (sa, sb)
                        };
                        if let Ok(Some(r)) = lagged_pearson(sa, sb, lag) {
                            let e = stats.entry(group).or_insert((0.0, 0, 0));
                            e.0 += r;
                            e.1 += 1;
                            if r > 0.85 {
                                e.2 += 1;
                            }
                        }
                    }
                }
            }
            println!("variable {var}:");
            for (g, (sum, n, pass)) in &stats {
                println!(
                    "  {g:12} mean r {:6.3}  pass {:6}/{:6} ({:.2}%)",
                    sum / *n as f64,
                    pass,
                    n,
                    100.0 * *pass as f64 / *n as f64
                );
            }
        }
        return;
    }

    if mode == "vpair" {
        // Correlation stats for pairs conditioned on sustained proximity.
        use swarmlead::methods::lagged_pearson;
        use swarmlead::trajectory::{unwrap_heading, Variable};
        let world: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(100.0);
        let noise: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(10.0);
        let cfgv = VicsekConfig {
            seed: 3,
            world_size: world,
            noise_half_angle: noise,
            ..Default::default()
        };
        let ts = VicsekSim::run(cfgv.clone()).unwrap();
        let kin = ts.derive_kinematics().unwrap();
        let ids = ts.agent_ids();
        let w = 100usize;
        let lag = 1usize;
        let r2 = cfgv.interaction_radius * cfgv.interaction_radius;
        let var = Variable::Heading;
        let mut stats: std::collections::BTreeMap<(&str, &str), (f64, usize, usize)> =
            Default::default();
        for t0 in (0..).map(|k| k * w).take_while(|t| t + w + lag <= kin.len()) {
            for (ai, &a) in ids.iter().enumerate() {
                let pa = ts.tracks()[ai].positions();
                for (bi, &b) in ids.iter().enumerate() {
                    if ai == bi {
                        continue;
                    }
                    let pb = ts.tracks()[bi].positions();
                    // Contact fraction over the window (position ticks offset +2).
                    let mut near = 0;
                    for t in t0 + 2..t0 + 2 + w {
                        let dx = pa[t].x - pb[t].x;
                        let dy = pa[t].y - pb[t].y;
                        if dx * dx + dy * dy <= r2 {
                            near += 1;
                        }
                    }
                    let contact = if near * 10 >= w * 8 { "entrained" } else { "loose" };
                    let group = match (a.0 < 5, b.0 < 5) {
                        (true, false) => "lead->foll",
                        (false, true) => "foll->lead",
                        (false, false) => "foll->foll",
                        (true, true) => continue,
                    };
                    let sa = unwrap_heading(&kin.series_at(ai).channel(var)[t0..t0 + w + lag]);
                    let sb = unwrap_heading(&kin.series_at(bi).channel(var)[t0..t0 + w + lag]);
                    if let Ok(Some(r)) = lagged_pearson(&sa, &sb, lag) {
                        let e = stats.entry((contact, group)).or_insert((0.0, 0, 0));
                        e.0 += r;
                        e.1 += 1;
                        if r > 0.85 {
                            e.2 += 1;
                        }
                    }
                }
            }
        }
        for ((contact, group), (sum, n, pass)) in &stats {
            println!(
                "{contact:10} {group:12} mean r {:6.3}  pass {:6}/{:6} ({:.1}%)",
                sum / *n as f64,
                pass,
                n,
                100.0 * *pass as f64 / *n as f64
            );
        }
        return;
    }

    if mode == "vscan2" {
        use swarmlead::trajectory::Variable;
        for &world in &[200.0, 300.0] {
            for &noise in &[15.0, 25.0, 35.0] {
                for (label, vars) in [
                    ("all5", Variable::ALL.to_vec()),
                    ("vxyh", vec![Variable::Vx, Variable::Vy, Variable::Heading]),
                ] {
                    let mut hits = 0;
                    let mut total = 0;
                    for seed in 1..=5u64 {
                        let ts = VicsekSim::run(VicsekConfig {
                            seed,
                            world_size: world,
                            noise_half_angle: noise,
                            ..Default::default()
                        })
                        .unwrap();
                        let leaders = true_leaders_of(&ts);
                        let kin = ts.derive_kinematics().unwrap();
                        let subset = ts.agent_ids();
                        let out = netinfer::infer_kinematics(
                            &kin,
                            &NetInferConfig {
                                window: 100,
                                variables: vars.clone(),
                                ..Default::default()
                            },
                        )
                        .unwrap();
                        let rep = build_ranking_report(
                            MethodKind::NetInfer,
                            seed,
                            &out.matrix,
                            &subset,
                            &leaders,
                        )
                        .unwrap();
                        for r in &rep.true_leader_ranks {
                            total += 1;
                            if r.rank <= 5 {
                                hits += 1;
                            }
                        }
                    }
                    println!(
                        "world {world:5} noise {noise:4} {label}: netinfer top-5 {hits}/{total} = {:.0}%",
                        100.0 * hits as f64 / total as f64
                    );
                }
            }
        }
        return;
    }

    if mode == "vraw" {
        for &world in &[40.0, 60.0, 80.0] {
            for &noise in &[10.0, 15.0, 20.0] {
                let mut hits = 0;
                let mut total = 0;
                let mut all_ranks = Vec::new();
                for seed in 1..=5u64 {
                    let ts = VicsekSim::run(VicsekConfig {
                        seed,
                        world_size: world,
                        noise_half_angle: noise,
                        ..Default::default()
                    })
                    .unwrap();
                    let leaders = true_leaders_of(&ts);
                    let kin = ts.derive_kinematics().unwrap();
                    let subset = ts.agent_ids();
                    let out = netinfer::infer_kinematics(
                        &kin,
                        &NetInferConfig {
                            window: 100,
                            unwrap_heading: false,
                            ..Default::default()
                        },
                    )
                    .unwrap();
                    let rep = build_ranking_report(
                        MethodKind::NetInfer,
                        seed,
                        &out.matrix,
                        &subset,
                        &leaders,
                    )
                    .unwrap();
                    for r in &rep.true_leader_ranks {
                        total += 1;
                        all_ranks.push(r.rank);
                        if r.rank <= 5 {
                            hits += 1;
                        }
                    }
                }
                println!(
                    "world {world:5} noise {noise:4} raw: netinfer top-5 {hits}/{total} = {:.0}%  ranks {all_ranks:?}",
                    100.0 * hits as f64 / total as f64
                );
            }
        }
        return;
    }

    if mode == "vtoggle" {
        for &world in &[100.0, 200.0] {
            for &noise in &[10.0, 15.0] {
                for (label, align, lnoise) in [
                    ("align+noise", true, true),
                    ("align+quiet", true, false),
                ] {
                    let mut hits = 0;
                    let mut total = 0;
                    for seed in 1..=5u64 {
                        let ts = VicsekSim::run(VicsekConfig {
                            seed,
                            world_size: world,
                            noise_half_angle: noise,
                            leaders_align: align,
                            leader_noise: lnoise,
                            ..Default::default()
                        })
                        .unwrap();
                        let leaders = true_leaders_of(&ts);
                        let kin = ts.derive_kinematics().unwrap();
                        let subset = ts.agent_ids();
                        let out = netinfer::infer_kinematics(
                            &kin,
                            &NetInferConfig {
                                window: 100,
                                ..Default::default()
                            },
                        )
                        .unwrap();
                        let rep = build_ranking_report(
                            MethodKind::NetInfer,
                            seed,
                            &out.matrix,
                            &subset,
                            &leaders,
                        )
                        .unwrap();
                        for r in &rep.true_leader_ranks {
                            total += 1;
                            if r.rank <= 5 {
                                hits += 1;
                            }
                        }
                    }
                    println!(
                        "world {world:5} noise {noise:4} {label}: netinfer top-5 {hits}/{total} = {:.0}%",
                        100.0 * hits as f64 / total as f64
                    );
                }
            }
        }
        return;
    }

    if mode == "vjoint" {
        // Full three-method check at one cell over the 10 benchmark seeds.
        let world: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(200.0);
        let noise: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(12.0);
        let stride: usize = args.get(4).and_then(|s| s.parse().ok()).unwrap_or(10);
        let align = args.get(5).map(|s| s == "alignquiet").unwrap_or(true);
        let t0 = Instant::now();
        let mut ni = (0, 0);
        let mut te_h = (0, 0);
        let mut tl_h = (0, 0);
        let mut te_events = 0usize;
        for seed in 1..=10u64 {
            let ts = VicsekSim::run(VicsekConfig {
                seed,
                world_size: world,
                noise_half_angle: noise,
                leaders_align: align,
                leader_noise: !align,
                ..Default::default()
            })
            .unwrap();
            let leaders = true_leaders_of(&ts);
            let kin = ts.derive_kinematics().unwrap();
            let subset = ts.agent_ids();
            let mut tally = |matrix: &swarmlead::InfluenceMatrix,
                             kind: MethodKind,
                             seed: u64,
                             slot: &mut (usize, usize)| {
                let rep =
                    build_ranking_report(kind, seed, matrix, &subset, &leaders).unwrap();
                for r in &rep.true_leader_ranks {
                    slot.1 += 1;
                    if r.rank <= 5 {
                        slot.0 += 1;
                    }
                }
            };
            let out = netinfer::infer_kinematics(
                &kin,
                &NetInferConfig {
                    window: 100,
                    stride: Some(stride),
                    ..Default::default()
                },
            )
            .unwrap();
            tally(&out.matrix, MethodKind::NetInfer, seed, &mut ni);
            let te_out = te::te_infer_kinematics(
                &kin,
                &TeConfig {
                    window: 100,
                    ..Default::default()
                },
            )
            .unwrap();
            te_events += te_out.events.len();
            tally(&te_out.matrix, MethodKind::Te, seed, &mut te_h);
            let tl_out = tlmi::tlmi_infer_kinematics(
                &kin,
                &TlmiConfig {
                    window: 100,
                    ..Default::default()
                },
            )
            .unwrap();
            tally(&tl_out.matrix, MethodKind::Tlmi, seed, &mut tl_h);
        }
        println!(
            "world {world} noise {noise} stride {stride} align {align}: netinfer {}/{} = {:.0}%  te {}/{} = {:.0}% ({te_events} events)  tlmi {}/{} = {:.0}%  [{:?}]",
            ni.0,
            ni.1,
            100.0 * ni.0 as f64 / ni.1 as f64,
            te_h.0,
            te_h.1,
            100.0 * te_h.0 as f64 / te_h.1 as f64,
            tl_h.0,
            tl_h.1,
            100.0 * tl_h.0 as f64 / tl_h.1 as f64,
            t0.elapsed()
        );
        return;
    }

    if mode == "vedges" {
        let world: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(100.0);
        let noise: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(10.0);
        for seed in 1..=3u64 {
            let ts = VicsekSim::run(VicsekConfig {
                seed,
                world_size: world,
                noise_half_angle: noise,
                ..Default::default()
            })
            .unwrap();
            let kin = ts.derive_kinematics().unwrap();
            let te_out = te::te_infer_kinematics(
                &kin,
                &TeConfig {
                    window: 100,
                    ..Default::default()
                },
            )
            .unwrap();
            let tl_out = tlmi::tlmi_infer_kinematics(
                &kin,
                &TlmiConfig {
                    window: 100,
                    ..Default::default()
                },
            )
            .unwrap();
            let ni_out = netinfer::infer_kinematics(
                &kin,
                &NetInferConfig {
                    window: 100,
                    ..Default::default()
                },
            )
            .unwrap();
            println!(
                "seed {seed}: te events {}, tlmi events {}, netinfer events {}",
                te_out.events.len(),
                tl_out.events.len(),
                ni_out.events.len()
            );
        }
        return;
    }

    if mode == "vte" {
        use swarmlead::methods::transfer_entropy;
        use swarmlead::trajectory::Variable;
        let world: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(200.0);
        let noise: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(10.0);
        let ts = VicsekSim::run(VicsekConfig {
            seed: 2,
            world_size: world,
            noise_half_angle: noise,
            ..Default::default()
        })
        .unwrap();
        let kin = ts.derive_kinematics().unwrap();
        let cfg = TeConfig {
            window: 100,
            ..Default::default()
        };
        // Most-contacted follower for leader 1.
        let r2 = 9.0;
        let lead = 1usize;
        let mut best = (0usize, 0usize);
        for f in 5..105 {
            let pa = ts.tracks()[lead].positions();
            let pb = ts.tracks()[f].positions();
            let near = (0..pa.len())
                .filter(|&t| {
                    let (dx, dy) = (pa[t].x - pb[t].x, pa[t].y - pb[t].y);
                    dx * dx + dy * dy <= r2
                })
                .count();
            if near > best.1 {
                best = (f, near);
            }
        }
        let f = best.0;
        println!("leader 1 vs follower {f} (near {} ticks)", best.1);
        for t0 in (0..).map(|k| k * 100).take_while(|t| t + 100 <= kin.len()) {
            let mut line = format!("window@{t0:3}: ");
            for &var in &Variable::SCALAR {
                let sl = &kin.series_at(lead).channel(var)[t0..t0 + 100];
                let sf = &kin.series_at(f).channel(var)[t0..t0 + 100];
                let fwd = transfer_entropy(sl, sf, &cfg).unwrap();
                let rev = transfer_entropy(sf, sl, &cfg).unwrap();
                line.push_str(&format!("{var} {fwd:.3}/{rev:.3}  "));
            }
            println!("{line}");
        }
        return;
    }

    if mode == "vwho" {
        use swarmlead::trajectory::Variable;
        let world: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(200.0);
        let noise: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(10.0);
        let raw = args.get(4).map(|s| s == "raw").unwrap_or(true);
        let cfgv = VicsekConfig {
            seed: 2,
            world_size: world,
            noise_half_angle: noise,
            ..Default::default()
        };
        let r2 = cfgv.interaction_radius * cfgv.interaction_radius;
        let ts = VicsekSim::run(cfgv).unwrap();
        let leaders = true_leaders_of(&ts);
        let kin = ts.derive_kinematics().unwrap();
        let subset = ts.agent_ids();
        let out = netinfer::infer_kinematics(
            &kin,
            &NetInferConfig {
                window: 100,
                unwrap_heading: !raw,
                ..Default::default()
            },
        )
        .unwrap();
        let rep =
            build_ranking_report(MethodKind::NetInfer, 2, &out.matrix, &subset, &leaders).unwrap();
        let near_frac = |a: usize, b: usize| -> f64 {
            let pa = ts.tracks()[a].positions();
            let pb = ts.tracks()[b].positions();
            let mut near = 0;
            for t in 0..pa.len() {
                let (dx, dy) = (pa[t].x - pb[t].x, pa[t].y - pb[t].y);
                if dx * dx + dy * dy <= r2 {
                    near += 1;
                }
            }
            near as f64 / pa.len() as f64
        };
        // Per-variable contribution of one pair, re-computed.
        let contrib = |a: usize, b: usize| -> Vec<(Variable, f64)> {
            let mut per = Vec::new();
            for &var in &Variable::ALL {
                let mut sum = 0.0;
                for t0 in (0..).map(|k| k * 100).take_while(|t| t + 101 <= kin.len()) {
                    let sa = &kin.series_at(a).channel(var)[t0..t0 + 101];
                    let sb = &kin.series_at(b).channel(var)[t0..t0 + 101];
                    let (ua, ub);
                    let (sa, sb) = if var == Variable::Heading && !raw {
                        ua = swarmlead::trajectory::unwrap_heading(sa);
                        ub = swarmlead::trajectory::unwrap_heading(sb);
                        (&ua[..], &ub[..])
                    } else {
                        (sa, sb)
                    };
                    if let Ok(Some(r)) = swarmlead::methods::lagged_pearson(sa, sb, 1) {
                        if r > 0.85 {
                            sum += r;
                        }
                    }
                }
                per.push((var, sum));
            }
            per
        };
        let mut describe = |label: &str, idx: usize| {
            let row: Vec<(usize, f64)> = (0..105)
                .map(|j| (j, out.matrix.get_at(idx, j)))
                .filter(|(_, w)| *w > 0.0)
                .collect();
            let mut sorted = row.clone();
            sorted.sort_by(|x, y| y.1.total_cmp(&x.1));
            let total: f64 = row.iter().map(|(_, w)| w).sum();
            println!(
                "{label} agent {} out={total:.1} edges={} top partners:",
                subset[idx],
                row.len()
            );
            for &(j, w) in sorted.iter().take(4) {
                println!(
                    "   -> {:3} w {:6.2} near {:4.0}% channels {:?}",
                    subset[j].0,
                    w,
                    100.0 * near_frac(idx, j),
                    contrib(idx, j)
                        .iter()
                        .filter(|(_, s)| *s > 0.0)
                        .map(|(v, s)| format!("{v}:{s:.1}"))
                        .collect::<Vec<_>>()
                );
            }
        };
        for r in rep.ordered.iter().take(3) {
            let idx = subset.iter().position(|a| *a == r.agent).unwrap();
            describe(&format!("rank {}", r.rank), idx);
        }
        for r in rep.true_leader_ranks.iter().take(2) {
            let idx = subset.iter().position(|a| *a == r.agent).unwrap();
            describe(&format!("leader rank {}", r.rank), idx);
        }
        return;
    }

    if mode == "vtrain" {
        let world: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(250.0);
        let noise: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(10.0);
        let cfgv = VicsekConfig {
            seed: 4,
            world_size: world,
            noise_half_angle: noise,
            ..Default::default()
        };
        let r2 = cfgv.interaction_radius * cfgv.interaction_radius;
        let ts = VicsekSim::run(cfgv).unwrap();
        // Followers within radius of each leader at sampled ticks.
        for tick in [100, 300, 500, 700, 999] {
            let mut line = format!("tick {tick:4}: train sizes");
            for l in 0..5 {
                let lp = ts.tracks()[l].positions()[tick];
                let mut k = 0;
                for f in 5..105 {
                    let fp = ts.tracks()[f].positions()[tick];
                    let (dx, dy) = (fp.x - lp.x, fp.y - lp.y);
                    if dx * dx + dy * dy <= r2 {
                        k += 1;
                    }
                }
                line.push_str(&format!(" {k:3}"));
            }
            println!("{line}");
        }
        // Score composition: top 10 by netinfer.
        let kin = ts.derive_kinematics().unwrap();
        let subset = ts.agent_ids();
        let leaders = true_leaders_of(&ts);
        let out = netinfer::infer_kinematics(
            &kin,
            &NetInferConfig {
                window: 100,
                ..Default::default()
            },
        )
        .unwrap();
        let rep =
            build_ranking_report(MethodKind::NetInfer, 4, &out.matrix, &subset, &leaders).unwrap();
        for r in rep.ordered.iter().take(10) {
            println!("rank {:3} agent {:3} score {:7.2}", r.rank, r.agent, r.out_score);
        }
        for r in &rep.true_leader_ranks {
            println!("leader {} rank {} score {:.2}", r.agent, r.rank, r.out_score);
        }
        return;
    }

    if mode == "wolf" {
        let wolf_roles = [Role::Alpha, Role::Pack, Role::Independent];
        for seed in 1..=10u64 {
            let t0 = Instant::now();
            let ts = WolfSheepSim::run(WolfSheepConfig {
                seed,
                ..Default::default()
            })
            .unwrap();
            let analyzed = analysis_subset(&ts, Some(&wolf_roles));
            let leaders = true_leaders_of(&ts);
            let kin = analyzed.derive_kinematics().unwrap();
            let subset = analyzed.agent_ids();

            let out = netinfer::infer_kinematics(&kin, &NetInferConfig::default()).unwrap();
            let report =
                build_ranking_report(MethodKind::NetInfer, seed, &out.matrix, &subset, &leaders)
                    .unwrap();
            let hist = leadership_histogram(&out.events, &subset);
            let alpha_rank = report.rank_of(swarmlead::AgentId(100)).unwrap();
            let alpha_count = hist.iter().find(|h| h.agent.0 == 100).unwrap().count;
            let mut pack: Vec<u64> = hist
                .iter()
                .filter(|h| (101..=114).contains(&h.agent.0))
                .map(|h| h.count)
                .collect();
            pack.sort();
            let mut ind: Vec<u64> = hist
                .iter()
                .filter(|h| (115..=129).contains(&h.agent.0))
                .map(|h| h.count)
                .collect();
            ind.sort();
            let med_pack = pack[pack.len() / 2];
            let med_ind = ind[ind.len() / 2];

            let te_out = te::te_infer_kinematics(&kin, &TeConfig::default()).unwrap();
            let te_rank = build_ranking_report(MethodKind::Te, seed, &te_out.matrix, &subset, &leaders)
                .unwrap()
                .rank_of(swarmlead::AgentId(100))
                .unwrap();
            let tl_out = tlmi::tlmi_infer_kinematics(&kin, &TlmiConfig::default()).unwrap();
            let tl_rank =
                build_ranking_report(MethodKind::Tlmi, seed, &tl_out.matrix, &subset, &leaders)
                    .unwrap()
                    .rank_of(swarmlead::AgentId(100))
                    .unwrap();

            println!(
                "seed {seed:2}: netinfer alpha rank {alpha_rank:2} (count {alpha_count:3}, med pack {med_pack:3}, med ind {med_ind:2}) | te rank {te_rank:2} | tlmi rank {tl_rank:2} | {:?}",
                t0.elapsed()
            );
        }
    } else {
        // Vicsek: netinfer + te + tlmi leader coverage.
        let mut ni_hits = 0;
        let mut te_hits = 0;
        let mut tl_hits = 0;
        for seed in 1..=10u64 {
            let t0 = Instant::now();
            let ts = VicsekSim::run(VicsekConfig {
                seed,
                ..Default::default()
            })
            .unwrap();
            let analyzed = analysis_subset(&ts, None);
            let leaders = true_leaders_of(&ts);
            let kin = analyzed.derive_kinematics().unwrap();
            let subset = analyzed.agent_ids();

            let ni = netinfer::infer_kinematics(
                &kin,
                &NetInferConfig {
                    window: 100,
                    ..Default::default()
                },
            )
            .unwrap();
            let ni_rep =
                build_ranking_report(MethodKind::NetInfer, seed, &ni.matrix, &subset, &leaders)
                    .unwrap();
            let te_out = te::te_infer_kinematics(
                &kin,
                &TeConfig {
                    window: 100,
                    ..Default::default()
                },
            )
            .unwrap();
            let te_rep =
                build_ranking_report(MethodKind::Te, seed, &te_out.matrix, &subset, &leaders)
                    .unwrap();
            let tl_out = tlmi::tlmi_infer_kinematics(
                &kin,
                &TlmiConfig {
                    window: 100,
                    ..Default::default()
                },
            )
            .unwrap();
            let tl_rep =
                build_ranking_report(MethodKind::Tlmi, seed, &tl_out.matrix, &subset, &leaders)
                    .unwrap();

            let fmt = |rep: &swarmlead::evaluation::RankingReport| -> (usize, String) {
                let mut hits = 0;
                let mut s = String::new();
                for r in &rep.true_leader_ranks {
                    if r.rank <= 5 {
                        hits += 1;
                    }
                    s.push_str(&format!("{}:{} ", r.agent, r.rank));
                }
                (hits, s)
            };
            let (h1, s1) = fmt(&ni_rep);
            let (h2, s2) = fmt(&te_rep);
            let (h3, s3) = fmt(&tl_rep);
            ni_hits += h1;
            te_hits += h2;
            tl_hits += h3;
            println!("seed {seed:2} ({:?}):", t0.elapsed());
            println!("  netinfer {s1}");
            println!("  te       {s2}");
            println!("  tlmi     {s3}");
        }
        println!(
            "top-5 coverage: netinfer {}/50 = {}%, te {}/50 = {}%, tlmi {}/50 = {}%",
            ni_hits,
            ni_hits * 2,
            te_hits,
            te_hits * 2,
            tl_hits,
            tl_hits * 2
        );
    }
}
