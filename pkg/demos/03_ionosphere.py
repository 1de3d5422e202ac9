# One seed of the full default schedule on Ionosphere (needs `pip install keel_ds`).
# Roughly half a minute on one CPU core.
import time

from wvad import data, datasets, trainer

raw, truth = datasets.load_benchmark("ionosphere")
x, mean, std, _ = data.standardize(raw)
ds = data.split_weak_labels(x, truth, 0.1, seed=0, mean=mean, std=std, name="ionosphere")
print(ds.summary())

cfg = trainer.TrainConfig(k=datasets.DEFAULT_K["ionosphere"], seed=0)
print("batch size", cfg.batch_size(ds.n_rows), " epochs", cfg.total_epochs)

start = time.perf_counter()
trained, scores, result = trainer.run(ds, cfg)
print(f"AUROC {result.auroc:.3f}  AUPRC {result.auprc:.3f}  ({time.perf_counter() - start:.0f}s)")

# how the three phases show up in the run record
for epoch in (0, 49, 50, 149, 150, 549):
    row = trained.record.rows[epoch]
    print(epoch, row["phase"], row["lambda"])
