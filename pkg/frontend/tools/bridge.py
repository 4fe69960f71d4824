#!/usr/bin/env python3
"""Local simulation bridge for the web UI.

Serves the frontend statics and answers POST /simulate by piping the request
body (circuit text) through `qcdiff simulate -`, relaying the SimulationReport
JSON unchanged. The UI thus consumes the simulator purely through its public
CLI contract.

Usage: python3 tools/bridge.py [--port 8642]
"""
import argparse
import subprocess
import sys
from http.server import SimpleHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

FRONTEND_ROOT = Path(__file__).resolve().parent.parent


class BridgeHandler(SimpleHTTPRequestHandler):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, directory=str(FRONTEND_ROOT), **kwargs)

    def do_POST(self):
        url = urlparse(self.path)
        if url.path != "/simulate":
            self.send_error(404)
            return
        length = int(self.headers.get("Content-Length", "0"))
        circuit_text = self.rfile.read(length).decode("utf-8")
        args = ["qcdiff", "simulate", "-"]
        query = parse_qs(url.query)
        if "layout" in query:
            args += ["--layout", query["layout"][0]]
        if "bars" in query:
            args += ["--bars", query["bars"][0]]
        if "decades" in query:
            args += ["--decades", query["decades"][0]]
        result = subprocess.run(args, input=circuit_text, capture_output=True, text=True)
        if result.returncode != 0:
            body = result.stderr.strip().encode("utf-8")
            self.send_response(400 if result.returncode == 1 else 500)
            self.send_header("Content-Type", "text/plain; charset=utf-8")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)
            return
        body = result.stdout.encode("utf-8")
        self.send_response(200)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, fmt, *args):
        print(f"[bridge] {fmt % args}", file=sys.stderr)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--port", type=int, default=8642)
    options = parser.parse_args()
    server = ThreadingHTTPServer(("127.0.0.1", options.port), BridgeHandler)
    print(f"serving the circuit designer on http://127.0.0.1:{options.port}/", file=sys.stderr)
    server.serve_forever()


if __name__ == "__main__":
    main()
