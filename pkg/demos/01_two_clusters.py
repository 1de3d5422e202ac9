# Two Gaussian clusters with a handful of anomalies planted on the segment
# between them.  Walks through the pieces one at a time: data, pretraining,
# EM initialization of the mixture prior, joint training, scoring.
import numpy as np

from wvad import data, features, metrics, trainer
from wvad.estimator import ScoreEstimator
from wvad.mixture_vae import MixtureVAE

spec = data.two_cluster_spec(dim=10, size=300, n_anomalies=30, label_ratio=0.2, seed=0)
ds = data.make_synthetic(spec)
print(ds.summary())

# a short schedule so the demo runs in seconds; the defaults are 50/100/400
cfg = trainer.TrainConfig(k=2, e1=20, e2=20, e3=40, seed=0)
rngs = trainer.phase_rngs(cfg.seed)
model = MixtureVAE(ds.dim, cfg.k, rng=rngs["init"])
est = ScoreEstimator(model.feature_dim, rng=rngs["init"])
print("encoder", model.encoder_widths, "decoder", model.decoder_widths, "estimator", est.net.widths)

losses = trainer.pretrain(model, ds, cfg, rngs["pretrain"])
print(f"pretraining loss {losses[0]:.3f} -> {losses[-1]:.3f}")

fit = trainer.init_prior(model, ds, cfg.k, rngs["em"], cfg)
print(f"EM: {fit.n_iter} iterations, avg log-likelihood {fit.log_likelihood:.3f}")
print("prior weights", np.round(model.prior.weights, 3))

record = trainer.joint_train(model, est, ds, cfg, rngs["joint"], rngs["noise"])
last = record.rows[-1]
print(f"last epoch: recon {last['recon']:.3f}  kl_cat {last['kl_cat']:.3f}  kl_z {last['kl_z']:.3f}  ce {last['ce']:.3f}")

# each feature on its own, then the estimator that combines them
f = model.features(ds.x)
parts = features.split(f, cfg.k, model.latent_dim)
mask = ds.unlabeled
for name in ("entropy", "rel_error", "cosine"):
    sign = -1 if name == "cosine" else 1
    print(f"{name:>10} alone: AUROC {metrics.auroc(sign * parts[name][mask], ds.truth[mask]):.3f}")

scores = est.score(f)
print(f"{'estimator':>10}:       AUROC {metrics.auroc(scores[mask], ds.truth[mask]):.3f}"
      f"  AUPRC {metrics.auprc(scores[mask], ds.truth[mask]):.3f}")

top = np.argsort(-scores[mask])[:10]
print("ten highest-scoring unlabeled rows are anomalies:", ds.truth[mask][top].tolist())
