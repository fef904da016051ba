"""ksi-centrality: graph analytics around the ksi centrality measure."""

try:
    from ksi import _core
except ImportError:  # in-tree build: _core sits next to the package dir
    import _core

FitReport = _core.FitReport
Graph = _core.Graph
KsiScores = _core.KsiScores
analyze = _core.analyze
average_normalized_ksi = _core.average_normalized_ksi
barabasi_albert = _core.barabasi_albert
boundary_edge_count = _core.boundary_edge_count
erdos_renyi = _core.erdos_renyi
ksi_all = _core.ksi_all
ksi_all_dense_oracle = _core.ksi_all_dense_oracle
largest_connected_component = _core.largest_connected_component
load_edge_list = _core.load_edge_list
log_fit_deviation = _core.log_fit_deviation
watts_strogatz = _core.watts_strogatz

__all__ = [
    "FitReport",
    "Graph",
    "KsiScores",
    "analyze",
    "average_normalized_ksi",
    "barabasi_albert",
    "boundary_edge_count",
    "erdos_renyi",
    "ksi_all",
    "ksi_all_dense_oracle",
    "largest_connected_component",
    "load_edge_list",
    "log_fit_deviation",
    "watts_strogatz",
]
