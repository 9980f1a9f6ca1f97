import unittest
import os
import tempfile
import shutil
import matplotlib
from unittest.mock import patch
from visualize import plot_sweep_margins, plot_class_sizes, plot_incidence
from __init__ import constructions
from arithmetic_bounds import sweep_margins
from centralizer_oracles import alternating_group

matplotlib.use("Agg")


class TestVisualization(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.test_dir = tempfile.mkdtemp()  # Create a temporary directory for testing

    @classmethod
    def tearDownClass(self):
        if os.path.exists(self.test_dir):
            shutil.rmtree(self.test_dir)

    def runTest(self):
        self.setUpClass()
        self.test_plot_sweep_margins()
        self.test_plot_class_sizes()
        self.test_plot_incidence()
        self.tearDownClass()

    @patch('visualize.plt')
    def test_plot_sweep_margins(self, mock_pyplot):
        margins = sweep_margins(4, 12)
        filename = os.path.join(self.test_dir, "margins.png")

        plot_sweep_margins(margins, filename, view=False)

        self.assertEqual(mock_pyplot.plot.call_count, len(margins))
        mock_pyplot.savefig.assert_called_once_with(filename)
        mock_pyplot.show.assert_not_called()

    def test_plot_class_sizes(self):
        classes = alternating_group(5).conjugacy_classes()
        filename = os.path.join(self.test_dir, "classes.png")

        plot_class_sizes(classes, filename, ylog=True, view=False)

        self.assertTrue(os.path.exists(filename))

    @patch('visualize.Digraph')
    def test_plot_incidence(self, mock_digraph):
        W2 = constructions.construct_w(2)
        filename = os.path.join(self.test_dir, "w2")

        plot_incidence(W2, filename)

        dot = mock_digraph.return_value
        # one edge per flag
        self.assertEqual(dot.edge.call_count, 45)
        dot.render.assert_called_once_with(filename, view=False)
