from flask import Flask, request, jsonify
from implementations import get_implementation
from flask_cors import CORS

from functools import wraps

import networkx as nx

from analysis.decider import theorem1_racg
from analysis.nerve_builder import nerve
from utils import config
from utils.errors import CarpetError
from utils.families import make_family
from utils.report import emit_report
from utils.system_format import parse_system, render_system

def require_api_key(f):
    @wraps(f)
    def decorated_function(*args, **kwargs):
        api_key = request.headers.get('X-API-Key')
        carpet_key = config.api_key()

        if carpet_key == "no-key":
            return f(*args, **kwargs)

        if not api_key or api_key != carpet_key:
            return jsonify({"error": "Unauthorized access"}), 401
        return f(*args, **kwargs)
    return decorated_function

app = Flask(__name__)
CORS(app)

@app.errorhandler(CarpetError)
def handle_carpet_error(error):
    app.logger.info("Rejected request: %s", error)
    return jsonify({"error": str(error)}), 400

def report_response(verdict):
    # emit_report fixes the key order; jsonify would sort it
    return app.response_class(emit_report(verdict, "json"), mimetype="application/json")

def matrix_from_request(data):
    """Coxeter matrix from a {"system": text} or {"family": name, ...} body."""
    if 'system' in data:
        return parse_system(data['system'])
    return make_family(data['family'], data.get('n'), [tuple(o) for o in data.get('overrides', [])])

@app.route('/api/implementation', methods=['GET'])
@require_api_key
def list_implementations():
    """List all available decision procedures."""
    from implementations import list_implementations
    return jsonify(list_implementations())

@app.route('/api/<implementation>/check', methods=['POST'])
@require_api_key
def check(implementation):
    """Classify the boundary of a Coxeter system with the specified procedure."""
    data = request.json

    if not data or ('system' not in data and 'family' not in data):
        return jsonify({"error": "A system or a family is required"}), 400

    impl = get_implementation(implementation)
    if not impl:
        return jsonify({"error": f"Implementation '{implementation}' not found"}), 404

    return report_response(impl.classify(matrix_from_request(data)))

@app.route('/api/check_racg', methods=['POST'])
@require_api_key
def check_racg():
    """Classify a right-angled Coxeter group given by its commuting graph."""
    data = request.json

    if not data or 'edges' not in data:
        return jsonify({"error": "Edges are required"}), 400

    G = nx.Graph()
    G.add_nodes_from(str(v) for v in data.get('vertices', []))
    for edge in data['edges']:
        if len(edge) != 2:
            return jsonify({"error": f"Invalid edge: {edge}"}), 400
        G.add_edge(str(edge[0]), str(edge[1]))
    if G.number_of_nodes() == 0:
        return jsonify({"error": "The graph has no vertices"}), 400

    return report_response(theorem1_racg(G))

@app.route('/api/nerve', methods=['POST'])
@require_api_key
def get_nerve():
    """Maximal faces and edge labels of the nerve of a system."""
    data = request.json

    if not data or 'system' not in data:
        return jsonify({"error": "A system is required"}), 400

    L = nerve(parse_system(data['system'])).to_dict()
    return jsonify({"complex": L["complex"], "labels": L["labels"]})

@app.route('/api/family/<name>', methods=['GET'])
@require_api_key
def get_family(name):
    """Render a named family in the text format."""
    n = request.args.get('n', type=int)
    M = make_family(name, n)
    return jsonify({"system": render_system(M, name if n is None else f"{name}{n}"), "matrix": M.to_dict()})

if __name__ == '__main__':
    app.run(debug=True, host='0.0.0.0', port=5000)
