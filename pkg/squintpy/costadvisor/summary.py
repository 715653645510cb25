import pandas as pd
from statsmodels.iolib.summary2 import Summary

from squintpy.core.architecture import Architecture


class RecommendationSummary(Summary):
    def __init__(self, recommendation):
        super().__init__()
        self.recommendation = recommendation

        self.add_title("Beam Squint Architecture Advisor")
        self._add_settings()
        self._add_score_table()
        self._add_thresholds()

        self.add_text(f"Recommended architecture: {recommendation.architecture.value}")

    def _add_settings(self):
        r = self.recommendation
        self.add_df(pd.DataFrame({
            "Setting": ["Fractional bandwidth", "Performance weight", "Cost weight"],
            "Value": [f"{r.bf:.4g}", f"{r.perf_weight:.4g}", f"{r.cost_weight:.4g}"],
        }), index=False)

    def _add_score_table(self):
        r = self.recommendation
        archs = list(Architecture)
        self.add_df(pd.DataFrame({
            "Architecture": [a.value for a in archs],
            "SE ratio": [r.perf_ratios[a] for a in archs],
            "Norm. cost": [r.normalized_costs[a] for a in archs],
            "Score": [r.scores[a] for a in archs],
        }), index=False, float_format="%.4f")

    def _add_thresholds(self):
        th = self.recommendation.thresholds
        if th is None:
            self.add_text("Cost crossover thresholds were not computed")
            return

        text = f"Cost crossovers: th1 = {th.th1:.4f}, th2 = {th.th2:.4f}"
        if th.degenerate:
            text += " (degenerate)"
        self.add_text(f"{text}. Regime: {self.recommendation.regime}")
