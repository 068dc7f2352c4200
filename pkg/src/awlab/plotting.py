"""Figures for sweep reports."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FORM_ORDER = ["F1", "F2", "F3", "F4", "none"]


def sweep_figure(records, path, title=None):
    """
    Two panels: verdict counts per matched form, and the outer gaps
    (m_1 - m_2, m_{n-1} - m_n) of every swept cocharacter coloured by verdict.
    Disagreements between the two classifiers are circled in red.
    """
    counts = dict.fromkeys(FORM_ORDER, 0)
    for rec in records:
        counts[rec["matched_form"] or "none"] += 1

    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(10, 4.2))
    colours = ["#4c72b0", "#55a868", "#c44e52", "#8172b2", "#999999"]
    ax0.bar(FORM_ORDER, [counts[k] for k in FORM_ORDER], color=colours)
    ax0.set_xlabel("closed-form match")
    ax0.set_ylabel("cocharacters")

    xs_t, ys_t, xs_f, ys_f, bad = [], [], [], [], []
    for rec in records:
        lam = rec["lambda"]
        if len(lam) < 2:
            continue
        pt = (lam[0] - lam[1], lam[-2] - lam[-1])
        if rec["closed_form"]:
            xs_t.append(pt[0])
            ys_t.append(pt[1])
        else:
            xs_f.append(pt[0])
            ys_f.append(pt[1])
        if not rec["agree"]:
            bad.append(pt)
    # several cocharacters share outer gaps when n > 3
    ax1.scatter(xs_f, ys_f, marker="x", color="#999999", label="not finite Coxeter")
    ax1.scatter(xs_t, ys_t, marker="o", facecolors="none", edgecolors="#4c72b0",
                s=60, label="finite Coxeter")
    if bad:
        ax1.scatter(*zip(*bad), s=160, facecolors="none", edgecolors="red",
                    linewidths=2, label="disagreement")
    ax1.set_xlabel(r"$m_1 - m_2$")
    ax1.set_ylabel(r"$m_{n-1} - m_n$")
    ax1.legend(loc="upper right", fontsize=8)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
