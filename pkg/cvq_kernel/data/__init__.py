"""
Synthetic datasets, preprocessing and the K-fold accuracy protocol.
"""
from cvq_kernel.data.datasets import DatasetParams, LabeledDataset, gen_blobs, gen_circles, gen_moons, generate_dataset
from cvq_kernel.data.preprocessing import LatticeDataset, discretize, lattice_to_continuous, standardize
from cvq_kernel.data.splits import FoldPlan, kfold_plan, split_train_test
from cvq_kernel.data.protocol import AccuracyCell, AccuracyReport, ProtocolParams, run_protocol
