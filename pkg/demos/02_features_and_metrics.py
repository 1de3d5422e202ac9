# The five-part feature vector and the two ranking metrics on hand-sized inputs.
import numpy as np

from wvad import features, metrics

y = np.array([[0.98, 0.02], [0.5, 0.5]])  # confident vs undecided cluster posterior
z = np.array([[0.3, -1.2], [0.1, 0.0]])
x = np.array([[1.0, 2.0, -1.0], [1.0, 2.0, -1.0]])
x_hat = np.array([[0.9, 2.1, -1.0], [-0.5, 0.3, 1.0]])  # good vs poor reconstruction

f = features.assemble(y, z, x, x_hat)
print("feature width", f.shape[1], "= K + L + 3")
for name, v in features.split(f, 2, 2).items():
    print(f"{name:>9}", np.round(v, 4))

# entropy is largest for the uniform posterior
print("ln 2 =", np.log(2), " entropy of [0.5, 0.5] =", features.cluster_entropy(np.array([0.5, 0.5])))

scores = np.array([0.8, 0.6, 0.4, 0.2])
labels = np.array([1, 0, 1, 0])
# 3 of the 4 positive/negative pairs are ordered correctly
print("AUROC", metrics.auroc(scores, labels))
# precision 1/1 at the first positive, 2/3 at the second
print("AUPRC", metrics.auprc(scores, labels), "=", (1 + 2 / 3) / 2)

# ties share credit: every tied score is one threshold
print("all tied -> AUROC", metrics.auroc(np.zeros(4), labels), " AUPRC", metrics.auprc(np.zeros(4), labels))

rep = metrics.aggregate([metrics.SeedResult(0, 0.90, 0.80), metrics.SeedResult(1, 0.95, 0.85)], "toy", 0.1, "demo")
print(rep.table())
