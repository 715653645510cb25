from itertools import zip_longest

import numpy as np


class WbbgSummary:
    def __init__(self, cfg, grid, theta_u, options, solution, history, mrt_gains):
        self.setup = [
            ('Elements', cfg.n_elements),
            ('Center frequency (GHz)', f"{cfg.center_frequency_hz / 1e9:g}"),
            ('User angle (deg)', f"{np.degrees(theta_u):.4g}"),
            ('Fractional bandwidth', f"{grid.fractional_bandwidth:.4g}"),
            ('Carriers', grid.size),
        ]
        self.opt_setup = [
            ('Restarts', options.restarts),
            ('Max iterations', options.max_iters),
            ('Tolerance', f"{options.tolerance:g}"),
            ('Seed', options.seed),
            ('Polish', options.polish),
        ]
        self.solution = solution
        self.history = history
        self.offsets = grid.fractional_offsets
        self.mrt_gains = mrt_gains

    def _repr_html_(self):
        """Used when printing to IPython notebooks"""

        def wrap(tag, element):
            return f"<{tag}>{element}</{tag}>"

        setup = ""
        for l1, l2 in zip_longest(self.setup, self.opt_setup):
            x1, x2 = ('', '') if l1 is None else l1
            y1, y2 = ('', '') if l2 is None else l2
            setup += wrap('tr', ''.join(wrap('td', i) for i in (x1, x2, y1, y2)))

        gains = ''.join(
            wrap('tr', ''.join(wrap('td', f"{v:.6g}") for v in (b, g, m)))
            for b, g, m in zip(self.offsets, self.solution.per_carrier_gain, self.mrt_gains))

        restarts = ''.join(
            wrap('li', f"{r.restart:3d} ({r.start}): {r.min_gain:.6g} in {r.iterations} iterations"
                       f"{'' if r.converged else ', not converged'}")
            for r in self.history)

        return f"""
<h1>Wideband Beam Gain Optimizer</h1>
<hr/>
<table>
    <tr>
        <th>Problem Setup</th>
        <th>Value</th>
        <th>Optimizer Setup</th>
        <th>Value</th>
    </tr>
    {setup}
</table>
<hr/>
<h3>Results</h3>
<div>
    <p>Minimum gain {self.solution.min_gain:.6g} (MRT {self.mrt_gains.min():.6g}),
    winning restart {self.solution.restart}{', polished' if self.solution.polished else ''}</p>
    <p>Gain spread {self.solution.gain_spread:.6g}</p>
    <ul>{restarts}</ul>
</div>
<table>
    <tr>
        <th>Offset</th>
        <th>WBBG gain</th>
        <th>MRT gain</th>
    </tr>
    {gains}
</table>
        """

    def as_text(self):
        n = 84

        def divider(char='-'):
            return '\n'.join(['', char * n, ''])

        rows = [
            f"{'Wideband Beam Gain Optimizer':^84s}",
            divider('='),
            f'{"Problem Setup":42s}{"Optimizer Setup":42s}',
        ]

        for l1, l2 in zip_longest(self.setup, self.opt_setup):
            x1, x2 = ('', '') if l1 is None else l1
            y1, y2 = ('', '') if l2 is None else l2
            rows.append(f"{x1:28s}{str(x2):>12s}    {y1:28s}{str(y2):>12s}")

        sol = self.solution
        rows.extend([
            divider(),
            f"Minimum gain {sol.min_gain:.6g} (MRT {self.mrt_gains.min():.6g}), winning restart "
            f"{sol.restart}{', polished' if sol.polished else ''}",
            f"Gain spread {sol.gain_spread:.6g} (max over min carrier gain)",
            *[f"{r.restart:3d} {r.start:>8s}: {r.min_gain:12.6g}{r.iterations:8d} iterations"
              f"{'' if r.converged else '  not converged'}" for r in self.history],
            divider(),
            f'{"Offset":>15s}{"WBBG gain":>15s}{"MRT gain":>15s}',
            *[f"{b:15.6f}{g:15.6f}{m:15.6f}"
              for b, g, m in zip(self.offsets, sol.per_carrier_gain, self.mrt_gains)],
        ])

        return '\n'.join(rows)

    def __str__(self):
        return self.as_text()

    def __repr__(self):
        return self.as_text()
